#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "corenet/centrality.hpp"
#include "corenet/graph.hpp"
#include "corenet/kcore.hpp"

namespace corenet {

struct SpreadResult {
  std::vector<VertexId> seeds;
  int rounds = 0;
};

// Synchronous flood from the seed set; rounds until every vertex in the
// (connected) component has the message. Equals the seed-set eccentricity.
inline SpreadResult spread_rounds(const Snapshot& g, const std::vector<VertexId>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("spread_rounds: empty seed set");
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<int> frontier;
  for (VertexId id : seeds) {
    int v = g.index_of(id);
    if (v == -1) throw std::invalid_argument("spread_rounds: seed not in graph");
    if (dist[v] == -1) {
      dist[v] = 0;
      frontier.push_back(v);
    }
  }
  int rounds = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    int v = frontier[head];
    for (int w : g.adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        rounds = std::max(rounds, dist[w]);
        frontier.push_back(w);
      }
  }
  for (int d : dist)
    if (d == -1) throw std::invalid_argument("spread_rounds: graph not connected");
  return {seeds, rounds};
}

inline int exact_diameter(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) diam = std::max(diam, d);
  }
  return diam;
}

// Remove the given vertices, then take the exact diameter of the largest
// remaining component. Singleton remainder -> 0.
inline int diameter_after_removal(const Snapshot& g, const std::vector<VertexId>& removed) {
  std::set<VertexId> rm(removed.begin(), removed.end());
  std::vector<int> keep;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!rm.count(g.ids[v])) keep.push_back(static_cast<int>(v));
  if (keep.empty()) throw std::invalid_argument("diameter_after_removal: nothing remains");
  auto sub = induced_subgraph(g, keep);
  auto comp = largest_component(sub);
  if (comp.num_vertices() <= 1) return 0;
  return exact_diameter(comp);
}

struct CcReport {
  bool is_core_connected = true;
  double cc_strength = 0.0;
  std::size_t pairs_examined = 0;
  std::size_t identity_violations = 0;  // min(P^max, P^O) != unconstrained dist
};

// Core-connectedness over non-adjacent vertex pairs outside the top shell.
// P^O: distance with the top shell deleted; P^max: min over core vertices w of
// dist(u,w) + dist(w,v). Exhaustive when the qualifying pair count fits the
// budget, otherwise seeded uniform sampling.
inline CcReport cc_check(const Snapshot& g, const CoreDecomposition& d,
                         std::size_t pair_budget = 100000, std::uint64_t seed = 1) {
  if (d.top_core.empty()) throw std::invalid_argument("cc_check: empty top shell");
  int n = static_cast<int>(g.num_vertices());
  std::vector<char> in_core(n, 0);
  for (int v : d.top_core) in_core[v] = 1;

  std::vector<int> outside;
  for (int v = 0; v < n; ++v)
    if (!in_core[v]) outside.push_back(v);

  // distances from every core vertex (gives P^max for any pair)
  std::vector<std::vector<int>> core_dist;
  for (int w : d.top_core) core_dist.push_back(bfs_distances(g, w));

  // core-deleted graph for P^O
  std::vector<int> keep = outside;
  Snapshot g_no_core = induced_subgraph(g, keep);

  std::vector<std::pair<int, int>> pairs;
  std::size_t total_possible =
      outside.size() < 2 ? 0 : outside.size() * (outside.size() - 1) / 2;
  if (total_possible <= pair_budget) {
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j) {
        int u = outside[i], v = outside[j];
        if (!g.has_edge(u, v)) pairs.push_back({u, v});
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    std::set<std::pair<int, int>> seen;
    std::size_t attempts = 0;
    while (seen.size() < pair_budget && attempts < pair_budget * 20) {
      ++attempts;
      int u = outside[pick(rng)], v = outside[pick(rng)];
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (g.has_edge(u, v)) continue;
      seen.insert({u, v});
    }
    pairs.assign(seen.begin(), seen.end());
  }

  // group pairs by first endpoint: one full BFS + one core-deleted BFS per u
  std::sort(pairs.begin(), pairs.end());
  CcReport rep;
  std::size_t through_core = 0;
  const int INF = 1 << 29;
  std::vector<int> full_dist, o_dist;
  int cur_u = -1;
  for (auto& [u, v] : pairs) {
    if (u != cur_u) {
      cur_u = u;
      full_dist = bfs_distances(g, u);
      int su = g_no_core.index_of(g.ids[u]);
      if (su >= 0)
        o_dist = bfs_distances(g_no_core, su);
      else
        o_dist.clear();
    }
    int p_x = full_dist[v] == -1 ? INF : full_dist[v];
    int p_o = INF;
    if (!o_dist.empty()) {
      int sv = g_no_core.index_of(g.ids[v]);
      if (sv >= 0 && o_dist[sv] != -1) p_o = o_dist[sv];
    }
    int p_max = INF;
    for (std::size_t w = 0; w < core_dist.size(); ++w) {
      int a = core_dist[w][u], b = core_dist[w][v];
      if (a != -1 && b != -1) p_max = std::min(p_max, a + b);
    }
    ++rep.pairs_examined;
    if (p_max != INF && p_max > p_o) rep.is_core_connected = false;
    if (p_max == p_x) ++through_core;
    if (std::min(p_max, p_o) != p_x) ++rep.identity_violations;
  }
  if (rep.pairs_examined > 0)
    rep.cc_strength =
        static_cast<double>(through_core) / static_cast<double>(rep.pairs_examined);
  return rep;
}

}  // namespace corenet
