#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace corenet {

using VertexId = long long;

struct TemporalEdge {
  VertexId u;
  VertexId v;
  long long t;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseResult {
  std::vector<TemporalEdge> edges;
  std::size_t self_loops_dropped = 0;
};

// One "u v t" per line, '#'/'%' comment lines skipped, self-loops dropped.
inline ParseResult parse_edge_stream(std::istream& in) {
  ParseResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    std::istringstream ls(line);
    VertexId u, v;
    long long t;
    if (!(ls >> u >> v >> t)) {
      throw ParseError("malformed edge at line " + std::to_string(lineno) +
                       ": \"" + line + "\"");
    }
    if (u < 0 || v < 0 || t < 0) {
      throw ParseError("negative field at line " + std::to_string(lineno));
    }
    if (u == v) {
      ++out.self_loops_dropped;
      continue;
    }
    out.edges.push_back({u, v, t});
  }
  if (out.edges.empty()) {
    throw ParseError("edge stream contains no usable edges");
  }
  return out;
}

// Undirected simple graph; original ids kept, dense indices internal.
struct Snapshot {
  int index = 0;
  std::vector<VertexId> ids;             // dense index -> original id, ascending
  std::vector<std::vector<int>> adj;     // sorted neighbor lists, no dups
  std::size_t edge_count = 0;

  std::size_t num_vertices() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int index_of(VertexId id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
  }

  bool has_edge(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }

  static Snapshot from_edge_set(int index,
                                const std::set<std::pair<VertexId, VertexId>>& edges) {
    Snapshot s;
    s.index = index;
    std::set<VertexId> vs;
    for (auto& [u, v] : edges) {
      vs.insert(u);
      vs.insert(v);
    }
    s.ids.assign(vs.begin(), vs.end());
    s.adj.resize(s.ids.size());
    for (auto& [u, v] : edges) {
      int a = s.index_of(u), b = s.index_of(v);
      s.adj[a].push_back(b);
      s.adj[b].push_back(a);
    }
    for (auto& nb : s.adj) std::sort(nb.begin(), nb.end());
    s.edge_count = edges.size();
    return s;
  }
};

enum class AggregationMode { windowed, cumulative };

struct SnapshotSeries {
  std::vector<Snapshot> snapshots;
  AggregationMode mode = AggregationMode::windowed;
  long long window = 1;
};

inline SnapshotSeries build_snapshots(const std::vector<TemporalEdge>& edges,
                                      AggregationMode mode, long long window) {
  if (edges.empty()) throw std::invalid_argument("no edges");
  if (window <= 0) throw std::invalid_argument("window must be positive");

  long long t_min = edges[0].t, t_max = edges[0].t;
  for (auto& e : edges) {
    t_min = std::min(t_min, e.t);
    t_max = std::max(t_max, e.t);
  }
  auto bucket_of = [&](long long t) {
    return static_cast<int>((t - t_min) / window);
  };
  int n_buckets = bucket_of(t_max) + 1;

  std::vector<std::set<std::pair<VertexId, VertexId>>> per_bucket(n_buckets);
  for (auto& e : edges) {
    VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    per_bucket[bucket_of(e.t)].insert({a, b});
  }

  SnapshotSeries series;
  series.mode = mode;
  series.window = window;
  std::set<std::pair<VertexId, VertexId>> acc;
  for (int i = 0; i < n_buckets; ++i) {
    if (mode == AggregationMode::cumulative) {
      acc.insert(per_bucket[i].begin(), per_bucket[i].end());
      series.snapshots.push_back(Snapshot::from_edge_set(i, acc));
    } else {
      series.snapshots.push_back(Snapshot::from_edge_set(i, per_bucket[i]));
    }
  }
  return series;
}

// Connected components by dense index; returns component label per vertex.
inline std::vector<int> component_labels(const Snapshot& g, int* n_components = nullptr) {
  int n = static_cast<int>(g.num_vertices());
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v])
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (n_components) *n_components = c;
  return comp;
}

inline Snapshot induced_subgraph(const Snapshot& g, const std::vector<int>& keep) {
  std::set<std::pair<VertexId, VertexId>> edges;
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : keep) in[v] = 1;
  for (int v : keep)
    for (int w : g.adj[v])
      if (in[w] && v < w) {
        VertexId a = g.ids[v], b = g.ids[w];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
  Snapshot sub;
  if (edges.empty()) {
    // keep isolated vertices
    sub.index = g.index;
    for (int v : keep) sub.ids.push_back(g.ids[v]);
    std::sort(sub.ids.begin(), sub.ids.end());
    sub.adj.resize(sub.ids.size());
    return sub;
  }
  sub = Snapshot::from_edge_set(g.index, edges);
  // re-add isolated kept vertices
  std::vector<VertexId> extra;
  for (int v : keep)
    if (sub.index_of(g.ids[v]) == -1) extra.push_back(g.ids[v]);
  if (!extra.empty()) {
    Snapshot merged;
    merged.index = g.index;
    merged.ids = sub.ids;
    merged.ids.insert(merged.ids.end(), extra.begin(), extra.end());
    std::sort(merged.ids.begin(), merged.ids.end());
    merged.adj.assign(merged.ids.size(), {});
    for (std::size_t v = 0; v < sub.ids.size(); ++v) {
      int nv = merged.index_of(sub.ids[v]);
      for (int w : sub.adj[v]) merged.adj[nv].push_back(merged.index_of(sub.ids[w]));
    }
    for (auto& nb : merged.adj) std::sort(nb.begin(), nb.end());
    merged.edge_count = sub.edge_count;
    sub = std::move(merged);
  }
  return sub;
}

// Largest connected component; ties broken by smallest minimum vertex id.
inline Snapshot largest_component(const Snapshot& g) {
  if (g.empty()) throw std::invalid_argument("largest_component: empty graph");
  int nc = 0;
  auto comp = component_labels(g, &nc);
  std::vector<std::size_t> size(nc, 0);
  std::vector<VertexId> min_id(nc, -1);
  int n = static_cast<int>(g.num_vertices());
  for (int v = 0; v < n; ++v) {
    ++size[comp[v]];
    if (min_id[comp[v]] == -1) min_id[comp[v]] = g.ids[v];  // ids ascending
  }
  int best = 0;
  for (int c = 1; c < nc; ++c) {
    if (size[c] > size[best] ||
        (size[c] == size[best] && min_id[c] < min_id[best]))
      best = c;
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (comp[v] == best) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace corenet
