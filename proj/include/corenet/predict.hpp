#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "corenet/graph.hpp"
#include "corenet/kcore.hpp"

namespace corenet {

enum class PredictMethod { core_degree, global_degree, uniform, w1, w2 };

inline const char* method_name(PredictMethod m) {
  switch (m) {
    case PredictMethod::core_degree: return "core-degree";
    case PredictMethod::global_degree: return "global-degree";
    case PredictMethod::uniform: return "uniform";
    case PredictMethod::w1: return "w1";
    default: return "w2";
  }
}

inline PredictMethod method_from_string(const std::string& s) {
  if (s == "core-degree") return PredictMethod::core_degree;
  if (s == "global-degree") return PredictMethod::global_degree;
  if (s == "uniform") return PredictMethod::uniform;
  if (s == "w1") return PredictMethod::w1;
  if (s == "w2") return PredictMethod::w2;
  throw std::invalid_argument("unknown prediction method: " + s);
}

namespace detail {

inline std::vector<VertexId> rank_by_degree(const Snapshot& g,
                                            const std::vector<int>& candidates,
                                            const std::vector<int>& degree, int m) {
  std::vector<int> idx = candidates;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return g.ids[a] < g.ids[b];
  });
  int take = std::min<std::size_t>(m, idx.size());
  std::vector<VertexId> out;
  for (int i = 0; i < take; ++i) out.push_back(g.ids[idx[i]]);
  return out;
}

}  // namespace detail

// m highest-degree vertices inside the top core. Degree is the full-snapshot
// degree by default; `induced_degree` restricts it to the top-core subgraph.
inline std::vector<VertexId> predict_core_degree(const Snapshot& g, int m,
                                                 bool induced_degree = false) {
  if (g.empty()) throw std::invalid_argument("predict_core_degree: empty graph");
  if (m < 1) throw std::invalid_argument("predict_core_degree: m must be >= 1");
  auto d = find_core(g);
  std::vector<int> degree(g.num_vertices());
  if (induced_degree) {
    for (int v : d.top_core) {
      int deg = 0;
      for (int u : g.adj[v])
        if (d.coreness[u] == d.k_max) ++deg;
      degree[v] = deg;
    }
  } else {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      degree[v] = g.degree(static_cast<int>(v));
  }
  return detail::rank_by_degree(g, d.top_core, degree, m);
}

// Global-degree ablation: top-m by degree regardless of coreness.
inline std::vector<VertexId> predict_global_degree(const Snapshot& g, int m) {
  if (g.empty()) throw std::invalid_argument("predict_global_degree: empty graph");
  if (m < 1) throw std::invalid_argument("predict_global_degree: m must be >= 1");
  std::vector<int> all(g.num_vertices());
  std::vector<int> degree(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    all[v] = static_cast<int>(v);
    degree[v] = g.degree(static_cast<int>(v));
  }
  return detail::rank_by_degree(g, all, degree, m);
}

enum class HistoryWeighting { uniform, w1, w2 };

// History-average baselines: predicted score of a vertex is a weighted mean
// of its past centrality scores. history is ordered oldest..newest; the last
// element is at distance d = 1 from the prediction point. Vertices absent at
// a step score 0 there.
inline std::vector<VertexId> predict_history_average(
    const std::vector<std::map<VertexId, double>>& history,
    HistoryWeighting weighting, int m) {
  if (history.empty())
    throw std::invalid_argument("predict_history_average: empty history");
  if (m < 1) throw std::invalid_argument("predict_history_average: m must be >= 1");
  int r = static_cast<int>(history.size());
  double weight_sum = 0.0;
  std::map<VertexId, double> total;
  for (int i = 0; i < r; ++i) {
    int dist = r - i;  // newest entry -> d = 1
    double w;
    switch (weighting) {
      case HistoryWeighting::uniform: w = 1.0; break;
      case HistoryWeighting::w1: w = 1.0 / dist; break;
      default: w = 1.0 / std::sqrt(static_cast<double>(dist)); break;
    }
    weight_sum += w;
    for (const auto& [id, score] : history[static_cast<std::size_t>(i)])
      total[id] += w * score;
  }
  std::vector<std::pair<VertexId, double>> ranked;
  for (const auto& [id, s] : total) ranked.push_back({id, s / weight_sum});
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  int take = std::min<std::size_t>(m, ranked.size());
  std::vector<VertexId> out;
  for (int i = 0; i < take; ++i) out.push_back(ranked[i].first);
  return out;
}

}  // namespace corenet
