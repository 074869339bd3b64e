#pragma once

#include <map>
#include <vector>

#include "transcite/cocite.hpp"

namespace transcite {

/// Pair-fraction betweenness centrality of an undirected, unweighted graph
/// given as adjacency lists: for each vertex v, the sum over unordered pairs
/// {s,t} (s != v != t) of the fraction of shortest s-t paths through v,
/// divided by (n-1)(n-2)/2. Values lie in [0,1]; n <= 2 yields all zeros.
/// Pairs in different components contribute nothing.
///
/// Runs the shortest-path accumulation per source; sources are processed in
/// fixed-size blocks that may execute concurrently, with block results merged
/// in block order so the output is deterministic.
std::vector<double> betweenness_fraction(const std::vector<std::vector<int>>& adjacency);

/// Betweenness over a co-citation network (edges treated as unweighted).
std::map<CitedRefKey, double> betweenness(const CoCitationNetwork& network);

} // namespace transcite
