#pragma once

#include <atomic>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "corenet/graph.hpp"
#include "corenet/params.hpp"

namespace corenet {

enum class CentralityKind { closeness, betweenness };

inline std::vector<int> bfs_distances(const Snapshot& g, int src) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<int> q{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < q.size(); ++head) {
    int v = q[head];
    for (int w : g.adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

inline void require_connected(const Snapshot& g, const char* who) {
  if (g.empty()) throw std::invalid_argument(std::string(who) + ": empty graph");
  auto dist = bfs_distances(g, 0);
  for (int d : dist)
    if (d == -1) throw std::invalid_argument(std::string(who) + ": graph not connected");
}

// ClC(v) = 1 / sum of BFS distances to all other vertices.
inline std::vector<double> closeness(const Snapshot& g) {
  require_connected(g, "closeness");
  int n = static_cast<int>(g.num_vertices());
  std::vector<double> score(n, 0.0);
  if (n == 1) return score;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    long long sum = 0;
    for (int d : dist) sum += d;
    score[v] = 1.0 / static_cast<double>(sum);
  }
  return score;
}

namespace detail {

// One Brandes source pass accumulating into `acc`.
inline void brandes_source(const Snapshot& g, int s, std::vector<double>& acc,
                           std::vector<int>& dist, std::vector<double>& sigma,
                           std::vector<double>& delta, std::vector<int>& order) {
  int n = static_cast<int>(g.num_vertices());
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(delta.begin(), delta.end(), 0.0);
  order.clear();
  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : g.adj[v]) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    int w = order[i];
    for (int v : g.adj[w])
      if (dist[v] == dist[w] - 1)
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    if (w != s) acc[w] += delta[w];
  }
}

}  // namespace detail

// Brandes betweenness over unordered pairs (each pair counted once).
// Sources are processed in fixed-size blocks whose partial sums are merged in
// block order, so results are bit-identical for any worker count.
inline std::vector<double> betweenness(const Snapshot& g, int workers = 0) {
  require_connected(g, "betweenness");
  int n = static_cast<int>(g.num_vertices());
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  constexpr int kBlock = 64;
  int n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> partial(n_blocks);
  std::atomic<int> next{0};

  auto worker_fn = [&]() {
    std::vector<int> dist(n), order;
    std::vector<double> sigma(n), delta(n);
    order.reserve(n);
    for (;;) {
      int b = next.fetch_add(1);
      if (b >= n_blocks) break;
      std::vector<double> acc(n, 0.0);
      int lo = b * kBlock, hi = std::min(n, lo + kBlock);
      for (int s = lo; s < hi; ++s)
        detail::brandes_source(g, s, acc, dist, sigma, delta, order);
      partial[b] = std::move(acc);
    }
  };

  if (workers == 1) {
    worker_fn();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker_fn);
    for (auto& t : pool) t.join();
  }

  std::vector<double> score(n, 0.0);
  for (int b = 0; b < n_blocks; ++b)
    for (int v = 0; v < n; ++v) score[v] += partial[b][v];
  for (auto& x : score) x *= 0.5;  // unordered pairs
  return score;
}

inline std::vector<double> centrality_scores(const Snapshot& g, CentralityKind kind) {
  return kind == CentralityKind::closeness ? closeness(g) : betweenness(g);
}

struct TopSet {
  CentralityKind kind = CentralityKind::closeness;
  int k = 0;
  std::vector<VertexId> members;  // ordered by (score desc, id asc)
};

inline TopSet top_k(const Snapshot& g, const std::vector<double>& score,
                    CentralityKind kind, int k) {
  if (k < 1) throw std::invalid_argument("top_k: k must be >= 1");
  int n = static_cast<int>(g.num_vertices());
  std::vector<int> idx(n);
  for (int v = 0; v < n; ++v) idx[v] = v;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return g.ids[a] < g.ids[b];
  });
  TopSet out;
  out.kind = kind;
  out.k = k;
  int take = std::min(k, n);
  for (int i = 0; i < take; ++i) out.members.push_back(g.ids[idx[i]]);
  return out;
}

// Jaccard overlap of top-k sets between consecutive snapshots (largest
// components). Element t compares G_t with G_{t+1}.
inline std::vector<double> overlap_series(const SnapshotSeries& s,
                                          CentralityKind kind, int k) {
  std::vector<std::vector<VertexId>> tops;
  for (const auto& g : s.snapshots) {
    if (g.empty()) continue;
    auto comp = largest_component(g);
    auto sc = centrality_scores(comp, kind);
    auto top = top_k(comp, sc, kind, k).members;
    std::sort(top.begin(), top.end());
    tops.push_back(std::move(top));
  }
  if (tops.size() < 2)
    throw std::invalid_argument("overlap_series: need at least 2 non-empty snapshots");
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < tops.size(); ++i)
    out.push_back(jaccard(tops[i], tops[i + 1]));
  return out;
}

}  // namespace corenet
