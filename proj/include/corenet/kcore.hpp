#pragma once

#include <stdexcept>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

struct CoreDecomposition {
  std::vector<int> coreness;              // per dense index
  int k_max = 0;
  std::vector<std::vector<int>> shells;   // shell k -> vertex indices, ascending
  std::vector<int> top_core;              // indices with coreness == k_max
};

// Batagelj-Zaversnik bucket peeling, O(|E|). Isolated vertices get coreness 0.
inline CoreDecomposition find_core(const Snapshot& g) {
  int n = static_cast<int>(g.num_vertices());
  if (n == 0) throw std::invalid_argument("find_core: empty graph");

  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // vertices sorted by degree via counting sort; pos/vert/bin as in BZ
  std::vector<int> bin(max_deg + 2, 0);
  for (int v = 0; v < n; ++v) ++bin[deg[v]];
  int start = 0;
  for (int d = 0; d <= max_deg; ++d) {
    int cnt = bin[d];
    bin[d] = start;
    start += cnt;
  }
  std::vector<int> vert(n), pos(n);
  for (int v = 0; v < n; ++v) {  // ascending v gives deterministic tie order
    pos[v] = bin[deg[v]];
    vert[pos[v]] = v;
    ++bin[deg[v]];
  }
  for (int d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  std::vector<int> core = deg;
  for (int i = 0; i < n; ++i) {
    int v = vert[i];
    for (int u : g.adj[v]) {
      if (core[u] > core[v]) {
        int du = core[u], pu = pos[u];
        int pw = bin[du], w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --core[u];
      }
    }
  }

  CoreDecomposition d;
  d.coreness = core;
  d.k_max = 0;
  for (int v = 0; v < n; ++v) d.k_max = std::max(d.k_max, core[v]);
  d.shells.assign(d.k_max + 1, {});
  for (int v = 0; v < n; ++v) d.shells[core[v]].push_back(v);
  d.top_core = d.shells[d.k_max];
  return d;
}

inline std::vector<int> top_core_vertices(const CoreDecomposition& d) {
  return d.top_core;
}

inline std::vector<VertexId> top_core_ids(const Snapshot& g, const CoreDecomposition& d) {
  std::vector<VertexId> out;
  out.reserve(d.top_core.size());
  for (int v : d.top_core) out.push_back(g.ids[v]);
  return out;
}

// Diagnostic: is the induced subgraph on the top core connected?
inline bool check_top_shell_connected(const Snapshot& g, const CoreDecomposition& d) {
  if (d.top_core.empty()) return false;
  std::vector<char> in_top(g.num_vertices(), 0);
  for (int v : d.top_core) in_top[v] = 1;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{d.top_core[0]};
  seen[d.top_core[0]] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (in_top[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == d.top_core.size();
}

}  // namespace corenet
