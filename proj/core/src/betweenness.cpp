#include "transcite/betweenness.hpp"

#include <future>
#include <queue>
#include <stack>

namespace transcite {

namespace {

// One Brandes source sweep: BFS from s, then dependency accumulation in
// reverse BFS order. Adds ordered-pair dependencies into acc.
void accumulate_source(const std::vector<std::vector<int>>& adj, int s,
                       std::vector<double>& acc) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::vector<int>> preds(n);
  std::vector<long long> sigma(n, 0);
  std::vector<int> dist(n, -1);
  std::vector<double> delta(n, 0.0);

  sigma[s] = 1;
  dist[s] = 0;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
      if (dist[w] == dist[v] + 1) {
        sigma[w] += sigma[v];
        preds[w].push_back(v);
      }
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int w = *it;
    for (int v : preds[w]) {
      delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                  (1.0 + delta[w]);
    }
    if (w != s) acc[w] += delta[w];
  }
}

constexpr int kParallelThreshold = 512;
constexpr int kBlockSize = 128;

} // namespace

std::vector<double> betweenness_fraction(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<double> acc(n, 0.0);
  if (n <= 2) return acc;

  if (n < kParallelThreshold) {
    for (int s = 0; s < n; ++s) accumulate_source(adjacency, s, acc);
  } else {
    const int blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<std::future<std::vector<double>>> futures;
    futures.reserve(blocks);
    for (int b = 0; b < blocks; ++b) {
      futures.push_back(std::async(std::launch::async, [&adjacency, b, n]() {
        std::vector<double> local(n, 0.0);
        const int lo = b * kBlockSize;
        const int hi = std::min(n, lo + kBlockSize);
        for (int s = lo; s < hi; ++s) accumulate_source(adjacency, s, local);
        return local;
      }));
    }
    // merge in block order: result independent of scheduling
    for (auto& f : futures) {
      auto local = f.get();
      for (int v = 0; v < n; ++v) acc[v] += local[v];
    }
  }

  // acc counts ordered pairs; (n-1)(n-2) converts to the unordered-pair fraction
  const double denom = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& v : acc) v /= denom;
  return acc;
}

std::map<CitedRefKey, double> betweenness(const CoCitationNetwork& network) {
  std::vector<const CitedRefKey*> keys;
  std::map<const CitedRefKey*, int, bool (*)(const CitedRefKey*, const CitedRefKey*)>
      index([](const CitedRefKey* a, const CitedRefKey* b) { return *a < *b; });

  keys.reserve(network.nodes.size());
  for (const auto& [key, node] : network.nodes) {
    index.emplace(&key, static_cast<int>(keys.size()));
    keys.push_back(&key);
  }

  std::vector<std::vector<int>> adj(keys.size());
  for (const auto& [edge, rec] : network.edges) {
    int ia = index.at(&edge.a);
    int ib = index.at(&edge.b);
    adj[ia].push_back(ib);
    adj[ib].push_back(ia);
  }

  auto values = betweenness_fraction(adj);
  std::map<CitedRefKey, double> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(*keys[i], values[i]);
  return out;
}

} // namespace transcite
