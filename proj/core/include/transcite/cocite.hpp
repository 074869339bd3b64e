#pragma once

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "transcite/bib.hpp"

namespace transcite {

/// Inclusive year interval of one slicing step.
struct TimeSlice {
  int start_year = 0;
  int end_year = 0;

  bool contains(int y) const { return y >= start_year && y <= end_year; }
  friend bool operator==(const TimeSlice&, const TimeSlice&) = default;
};

/// Keep the n most cited references of a slice (ties resolved by earlier
/// year, then lexicographic key).
struct TopN {
  int n = 30;
};

/// CiteSpace-style (c, cc, ccv) triple: c = minimum citations in a single
/// year of the slice, cc = minimum raw co-citation count, ccv = minimum
/// cosine co-citation coefficient x 100.
struct Triple {
  int c = 3;
  int cc = 3;
  int ccv = 20;
};

using SelectionThreshold = std::variant<TopN, Triple>;

/// Per-year citation counts ("tree ring") of one reference.
using YearCounts = std::map<int, int>;

/// Citation rings of every reference cited within one slice.
using SliceCounts = std::map<CitedRefKey, YearCounts>;

struct NodeRecord {
  YearCounts citation_ring;
  int first_seen_slice = 0; // start year of the earliest contributing slice

  long total_citations() const;
  int max_single_year() const;
};

/// Unordered node pair; a < b always holds.
struct EdgeKey {
  CitedRefKey a;
  CitedRefKey b;

  static EdgeKey make(CitedRefKey x, CitedRefKey y);

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend bool operator<(const EdgeKey& l, const EdgeKey& r) {
    if (l.a < r.a) return true;
    if (r.a < l.a) return false;
    return l.b < r.b;
  }
};

struct EdgeRecord {
  int cocite_count = 0;
  int first_year = 0; // earliest publication year of a co-citing record

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

using EdgeMap = std::map<EdgeKey, EdgeRecord>;

/// Undirected weighted co-citation network. No self loops; every edge
/// endpoint is present in nodes.
struct CoCitationNetwork {
  std::map<CitedRefKey, NodeRecord> nodes;
  EdgeMap edges;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }

  /// Sum of all nodes' rings, per year (the background stream burst
  /// detection is run against).
  YearCounts yearly_totals() const;
};

/// Contiguous slices of `length` years covering [year_min, year_max]; the
/// last slice may be shorter. Throws Error("EmptyCorpus") if no record has a
/// year.
std::vector<TimeSlice> slice_corpus(const Corpus& corpus, int length);

/// Citation rings restricted to records published within the slice. A record
/// citing a reference contributes one count regardless of how often the raw
/// file repeated it.
SliceCounts count_slice_citations(const Corpus& corpus, const TimeSlice& slice);

/// Apply the selection threshold to a slice's counts.
std::set<CitedRefKey> select_nodes(const SliceCounts& counts,
                                   const SelectionThreshold& threshold);

/// Count unordered co-citation pairs among `selected` refs over records in
/// the slice. Under a Triple threshold, edges below cc or below ccv/100 in
/// cosine coefficient (on slice totals) are pruned.
EdgeMap count_cocitations(const Corpus& corpus, const TimeSlice& slice,
                          const std::set<CitedRefKey>& selected,
                          const SliceCounts& counts,
                          const SelectionThreshold& threshold);

/// counts -> select -> co-cite for one slice, assembled into a network.
CoCitationNetwork build_slice_network(const Corpus& corpus, const TimeSlice& slice,
                                      const SelectionThreshold& threshold);

/// Merge per-slice networks into the panoramic network: rings and edge
/// counts sum, first_year and first_seen_slice take minima. Associative.
CoCitationNetwork merge_slices(const std::vector<CoCitationNetwork>& slices);

/// slice -> per-slice networks -> merge.
CoCitationNetwork build_network(const Corpus& corpus, int slice_length,
                                const SelectionThreshold& threshold);

} // namespace transcite
