#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "corenet/graph.hpp"
#include "corenet/kcore.hpp"

namespace corenet {

// Fraction of inter-shell edges with an endpoint in the top core.
// No inter-shell edges at all -> 1.0.
inline double compute_ef(const Snapshot& g, const CoreDecomposition& d) {
  long long e_i = 0, e_m = 0;
  int n = static_cast<int>(g.num_vertices());
  for (int v = 0; v < n; ++v) {
    for (int u : g.adj[v]) {
      if (u <= v) continue;
      if (d.coreness[u] != d.coreness[v]) {
        ++e_i;
        if (d.coreness[u] == d.k_max || d.coreness[v] == d.k_max) ++e_m;
      }
    }
  }
  if (e_i == 0) return 1.0;
  return static_cast<double>(e_m) / static_cast<double>(e_i);
}

enum class CfxMode { shell, core };

// Mean intra-shell (or intra-core) density over the non-top levels.
// Levels with fewer than 2 vertices contribute 0. k_max == 1 -> 0.
inline double compute_cfx(const Snapshot& g, const CoreDecomposition& d,
                          CfxMode mode = CfxMode::shell) {
  if (d.k_max <= 1) return 0.0;
  int n = static_cast<int>(g.num_vertices());
  std::vector<long long> intra(d.k_max + 1, 0);
  std::vector<long long> count(d.k_max + 1, 0);

  if (mode == CfxMode::shell) {
    for (int v = 0; v < n; ++v)
      if (d.coreness[v] >= 1) ++count[d.coreness[v]];
    for (int v = 0; v < n; ++v)
      for (int u : g.adj[v])
        if (u > v && d.coreness[u] == d.coreness[v]) ++intra[d.coreness[v]];
  } else {
    // core k = all vertices with coreness >= k; edges with both ends inside
    for (int v = 0; v < n; ++v)
      for (int k = 1; k <= d.coreness[v]; ++k) ++count[k];
    for (int v = 0; v < n; ++v)
      for (int u : g.adj[v])
        if (u > v) {
          int lim = std::min(d.coreness[u], d.coreness[v]);
          for (int k = 1; k <= lim; ++k) ++intra[k];
        }
  }

  double sum = 0.0;
  for (int k = 1; k < d.k_max; ++k) {
    long long m = count[k];
    if (m >= 2) {
      double possible = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
      sum += static_cast<double>(intra[k]) / possible;
    }
  }
  return sum / static_cast<double>(d.k_max - 1);
}

// Edge density of the top core; |top core| < 2 -> 0.
inline double compute_ed(const Snapshot& g, const CoreDecomposition& d) {
  std::size_t m = d.top_core.size();
  if (m < 2) return 0.0;
  long long intra = 0;
  for (int v : d.top_core)
    for (int u : g.adj[v])
      if (u > v && d.coreness[u] == d.k_max) ++intra;
  double possible = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
  return static_cast<double>(intra) / possible;
}

// |a∩b| / |a∪b| on sorted id vectors; both empty -> 1.0.
inline double jaccard(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t i = 0, j = 0, inter = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++inter; ++i; ++j; }
  }
  std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

struct ParamTuple {
  int t = 0;
  double ef = 0, cfx = 0, ed = 0;
  std::optional<double> cv;  // absent at the first usable snapshot
};

struct ParamSeries {
  std::vector<ParamTuple> tuples;
  std::vector<double> ef_values, cfx_values, ed_values, cv_values;  // CDF support
  std::vector<int> skipped_empty;  // indices of empty snapshots skipped
};

inline ParamSeries compute_series(const SnapshotSeries& s,
                                  CfxMode mode = CfxMode::shell) {
  ParamSeries out;
  std::vector<VertexId> prev_top;
  bool have_prev = false;
  for (const auto& g : s.snapshots) {
    if (g.empty()) {
      out.skipped_empty.push_back(g.index);
      continue;
    }
    auto d = find_core(g);
    ParamTuple pt;
    pt.t = g.index;
    pt.ef = compute_ef(g, d);
    pt.cfx = compute_cfx(g, d, mode);
    pt.ed = compute_ed(g, d);
    auto top = top_core_ids(g, d);  // ascending by construction of top_core
    std::sort(top.begin(), top.end());
    if (have_prev) pt.cv = jaccard(prev_top, top);
    prev_top = std::move(top);
    have_prev = true;
    out.ef_values.push_back(pt.ef);
    out.cfx_values.push_back(pt.cfx);
    out.ed_values.push_back(pt.ed);
    if (pt.cv) out.cv_values.push_back(*pt.cv);
    out.tuples.push_back(std::move(pt));
  }
  if (out.tuples.size() < 2)
    throw std::invalid_argument("compute_series: need at least 2 non-empty snapshots");
  return out;
}

}  // namespace corenet
