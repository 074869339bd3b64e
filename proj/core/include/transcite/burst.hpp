#pragma once

#include <map>
#include <vector>

namespace transcite {

struct BurstParams {
  double s = 2.0;     // burst-to-base rate ratio, > 1
  double gamma = 1.0; // up-transition cost scale, >= 0
};

/// A maximal run of the elevated-rate state. weight is the cost saving of
/// the burst state over the base state summed across the run's years.
struct BurstInterval {
  int start_year = 0;
  int end_year = 0;
  double weight = 0.0;

  friend bool operator==(const BurstInterval&, const BurstInterval&) = default;
};

struct BurstResult {
  std::vector<BurstInterval> intervals;
  double total_weight = 0.0;    // sum of interval weights
  double strongest_weight = 0.0; // weight of the single strongest interval
};

/// Two-state batch burst detection over yearly counts.
///
/// The stream runs over the contiguous year span of `totals` (absent years
/// count as zero). With d_y = totals[y] and r_y = ring[y]:
///   base rate     p0 = sum(r) / sum(d)
///   burst rate    p1 = min(s * p0, 1)
///   state cost    -ln[ C(d_y, r_y) p^r_y (1-p)^(d_y - r_y) ]
///   up transition gamma * ln(Y), down transitions free, initial state base.
/// The minimum-cost state sequence is found by dynamic programming; exact
/// cost ties resolve to the lexicographically smallest sequence (base state
/// preferred, years scanned in order), so a burst is opened only when it is
/// strictly cheaper.
///
/// A degenerate stream (sum of totals is zero) yields no intervals and zero
/// weight. Preconditions (ring years within the totals span, ring <= totals
/// per year) are enforced with Error("InvalidStream").
BurstResult detect_bursts(const std::map<int, int>& ring,
                          const std::map<int, int>& totals,
                          const BurstParams& params);

} // namespace transcite
