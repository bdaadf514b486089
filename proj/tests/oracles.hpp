// Brute-force reference implementations used only by tests. These stay
// independent of the library's algorithmic paths: peeling by literal
// repeated removal, centrality by Floyd-Warshall distances plus path-count
// DP, parameters by O(V^2) shell enumeration.
#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "corenet/graph.hpp"

namespace oracle {

using corenet::Snapshot;
using corenet::VertexId;

// Iterated peeling: repeatedly delete all vertices with degree < k.
inline std::vector<int> brute_coreness(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  std::vector<int> core(n, 0);
  std::vector<char> alive(n, 1);
  for (int k = 1;; ++k) {
    // k-core: repeatedly remove vertices with (remaining) degree < k
    std::vector<char> cur = alive;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!cur[v]) continue;
        int deg = 0;
        for (int w : g.adj[v])
          if (cur[w]) ++deg;
        if (deg < k) {
          cur[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int v = 0; v < n; ++v)
      if (cur[v]) {
        core[v] = k;
        any = true;
      }
    if (!any) break;
    alive = cur;
  }
  return core;
}

// All-pairs shortest distances via Floyd-Warshall.
inline std::vector<std::vector<int>> fw_distances(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  const int INF = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) d[v][w] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Shortest-path counts sigma[s][t] via DP on the distance matrix.
inline std::vector<std::vector<double>> path_counts(
    const Snapshot& g, const std::vector<std::vector<int>>& dist) {
  int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (int s = 0; s < n; ++s) {
    sigma[s][s] = 1.0;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dist[s][a] < dist[s][b]; });
    for (int t : order) {
      if (t == s) continue;
      for (int u : g.adj[t])
        if (dist[s][u] == dist[s][t] - 1) sigma[s][t] += sigma[s][u];
    }
  }
  return sigma;
}

// Betweenness over unordered pairs via the pair-dependency identity.
inline std::vector<double> brute_betweenness(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  auto dist = fw_distances(g);
  auto sigma = path_counts(g, dist);
  std::vector<double> bc(n, 0.0);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] + dist[v][t] == dist[s][t])
          bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
  return bc;
}

inline std::vector<double> brute_closeness(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  auto dist = fw_distances(g);
  std::vector<double> cc(n, 0.0);
  if (n == 1) return cc;
  for (int v = 0; v < n; ++v) {
    long long sum = 0;
    for (int t = 0; t < n; ++t) sum += dist[v][t];
    cc[v] = 1.0 / static_cast<double>(sum);
  }
  return cc;
}

struct BruteParams {
  double ef, cfx_shell, ed;
};

// O(V^2) shell enumeration over the brute coreness labels.
inline BruteParams brute_params(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  auto core = brute_coreness(g);
  int kmax = 0;
  for (int v = 0; v < n; ++v) kmax = std::max(kmax, core[v]);

  long long e_i = 0, e_m = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      if (core[u] != core[v]) {
        ++e_i;
        if (core[u] == kmax || core[v] == kmax) ++e_m;
      }
    }
  BruteParams out{};
  out.ef = e_i == 0 ? 1.0 : static_cast<double>(e_m) / e_i;

  std::map<int, std::vector<int>> shells;
  for (int v = 0; v < n; ++v)
    if (core[v] >= 1) shells[core[v]].push_back(v);

  auto shell_density = [&](int k) {
    auto it = shells.find(k);
    if (it == shells.end() || it->second.size() < 2) return 0.0;
    const auto& vs = it->second;
    long long intra = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j])) ++intra;
    double possible = 0.5 * vs.size() * (vs.size() - 1.0);
    return intra / possible;
  };

  if (kmax <= 1) {
    out.cfx_shell = 0.0;
  } else {
    double sum = 0.0;
    for (int k = 1; k < kmax; ++k) sum += shell_density(k);
    out.cfx_shell = sum / (kmax - 1);
  }
  out.ed = shell_density(kmax);
  if (shells[kmax].size() < 2) out.ed = 0.0;
  return out;
}

// Seeded random simple graph; connect=true grows a random spanning tree first.
inline Snapshot random_graph(int n, double p, std::uint64_t seed, bool connect) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<VertexId, VertexId>> edges;
  if (connect) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> prev(0, v - 1);
      edges.insert({prev(rng), v});
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.insert({u, v});
  if (edges.empty()) edges.insert({0, 1});
  return Snapshot::from_edge_set(0, edges);
}

}  // namespace oracle
