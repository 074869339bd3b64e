#include "transcite/cocite.hpp"

#include <algorithm>
#include <cmath>

#include "transcite/error.hpp"

namespace transcite {

long NodeRecord::total_citations() const {
  long sum = 0;
  for (const auto& [year, count] : citation_ring) sum += count;
  return sum;
}

int NodeRecord::max_single_year() const {
  int best = 0;
  for (const auto& [year, count] : citation_ring) best = std::max(best, count);
  return best;
}

EdgeKey EdgeKey::make(CitedRefKey x, CitedRefKey y) {
  if (y < x) std::swap(x, y);
  return EdgeKey{std::move(x), std::move(y)};
}

YearCounts CoCitationNetwork::yearly_totals() const {
  YearCounts totals;
  for (const auto& [key, node] : nodes)
    for (const auto& [year, count] : node.citation_ring) totals[year] += count;
  return totals;
}

std::vector<TimeSlice> slice_corpus(const Corpus& corpus, int length) {
  if (length < 1) throw Error("ConfigInvalid", "slice length must be positive");
  if (!corpus.year_min || !corpus.year_max)
    throw Error("EmptyCorpus", "no dated records to slice");

  std::vector<TimeSlice> slices;
  for (int start = *corpus.year_min; start <= *corpus.year_max; start += length) {
    slices.push_back({start, std::min(start + length - 1, *corpus.year_max)});
  }
  return slices;
}

SliceCounts count_slice_citations(const Corpus& corpus, const TimeSlice& slice) {
  SliceCounts counts;
  for (const auto& rec : corpus.records) {
    if (!rec.year || !slice.contains(*rec.year)) continue;
    for (const auto& ref : rec.cited_refs) counts[ref][*rec.year] += 1;
  }
  return counts;
}

namespace {

long total_of(const YearCounts& ring) {
  long sum = 0;
  for (const auto& [y, c] : ring) sum += c;
  return sum;
}

int max_year_count(const YearCounts& ring) {
  int best = 0;
  for (const auto& [y, c] : ring) best = std::max(best, c);
  return best;
}

} // namespace

std::set<CitedRefKey> select_nodes(const SliceCounts& counts,
                                   const SelectionThreshold& threshold) {
  std::set<CitedRefKey> selected;

  if (const auto* triple = std::get_if<Triple>(&threshold)) {
    if (triple->c < 1 || triple->cc < 1 || triple->ccv < 1)
      throw Error("ConfigInvalid", "threshold triple components must be positive");
    for (const auto& [key, ring] : counts)
      if (max_year_count(ring) >= triple->c) selected.insert(key);
    return selected;
  }

  const auto& top = std::get<TopN>(threshold);
  if (top.n < 1) throw Error("ConfigInvalid", "top-n must be positive");

  std::vector<std::pair<const CitedRefKey*, long>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [key, ring] : counts) ranked.emplace_back(&key, total_of(ring));
  std::sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
    if (l.second != r.second) return l.second > r.second;
    if (l.first->year_or_max() != r.first->year_or_max())
      return l.first->year_or_max() < r.first->year_or_max();
    return *l.first < *r.first;
  });
  const std::size_t keep = std::min<std::size_t>(ranked.size(), top.n);
  for (std::size_t i = 0; i < keep; ++i) selected.insert(*ranked[i].first);
  return selected;
}

EdgeMap count_cocitations(const Corpus& corpus, const TimeSlice& slice,
                          const std::set<CitedRefKey>& selected,
                          const SliceCounts& counts,
                          const SelectionThreshold& threshold) {
  EdgeMap edges;
  for (const auto& rec : corpus.records) {
    if (!rec.year || !slice.contains(*rec.year)) continue;
    std::vector<const CitedRefKey*> cited;
    for (const auto& ref : rec.cited_refs)
      if (selected.contains(ref)) cited.push_back(&ref);
    for (std::size_t i = 0; i < cited.size(); ++i) {
      for (std::size_t j = i + 1; j < cited.size(); ++j) {
        if (*cited[i] == *cited[j]) continue; // no self loops
        auto [it, inserted] =
            edges.try_emplace(EdgeKey::make(*cited[i], *cited[j]), EdgeRecord{0, *rec.year});
        it->second.cocite_count += 1;
        it->second.first_year = std::min(it->second.first_year, *rec.year);
      }
    }
  }

  if (const auto* triple = std::get_if<Triple>(&threshold)) {
    for (auto it = edges.begin(); it != edges.end();) {
      const auto& [key, edge] = *it;
      bool keep = edge.cocite_count >= triple->cc;
      if (keep) {
        const double ca = static_cast<double>(total_of(counts.at(key.a)));
        const double cb = static_cast<double>(total_of(counts.at(key.b)));
        const double coefficient = edge.cocite_count / std::sqrt(ca * cb);
        keep = coefficient * 100.0 >= static_cast<double>(triple->ccv);
      }
      it = keep ? std::next(it) : edges.erase(it);
    }
  }
  return edges;
}

CoCitationNetwork build_slice_network(const Corpus& corpus, const TimeSlice& slice,
                                      const SelectionThreshold& threshold) {
  CoCitationNetwork net;
  SliceCounts counts = count_slice_citations(corpus, slice);
  auto selected = select_nodes(counts, threshold);
  for (const auto& key : selected) {
    NodeRecord node;
    node.citation_ring = counts.at(key);
    node.first_seen_slice = slice.start_year;
    net.nodes.emplace(key, std::move(node));
  }
  net.edges = count_cocitations(corpus, slice, selected, counts, threshold);
  return net;
}

CoCitationNetwork merge_slices(const std::vector<CoCitationNetwork>& slices) {
  CoCitationNetwork merged;
  for (const auto& net : slices) {
    for (const auto& [key, node] : net.nodes) {
      auto [it, inserted] = merged.nodes.try_emplace(key, node);
      if (inserted) continue;
      for (const auto& [year, count] : node.citation_ring)
        it->second.citation_ring[year] += count;
      it->second.first_seen_slice =
          std::min(it->second.first_seen_slice, node.first_seen_slice);
    }
    for (const auto& [key, edge] : net.edges) {
      auto [it, inserted] = merged.edges.try_emplace(key, edge);
      if (inserted) continue;
      it->second.cocite_count += edge.cocite_count;
      it->second.first_year = std::min(it->second.first_year, edge.first_year);
    }
  }
  return merged;
}

CoCitationNetwork build_network(const Corpus& corpus, int slice_length,
                                const SelectionThreshold& threshold) {
  auto slices = slice_corpus(corpus, slice_length);
  std::vector<CoCitationNetwork> nets;
  nets.reserve(slices.size());
  for (const auto& slice : slices)
    nets.push_back(build_slice_network(corpus, slice, threshold));
  return merge_slices(nets);
}

} // namespace transcite
