#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <vector>

#include "corenet/centrality.hpp"
#include "corenet/graph.hpp"
#include "corenet/predict.hpp"

namespace corenet {

// 2|P∩A| / (|P|+|A|); both empty -> 1.0. Inputs need not be sorted.
inline double f1_sets(std::vector<VertexId> predicted, std::vector<VertexId> actual) {
  if (predicted.empty() && actual.empty()) return 1.0;
  std::sort(predicted.begin(), predicted.end());
  std::sort(actual.begin(), actual.end());
  std::size_t i = 0, j = 0, inter = 0;
  while (i < predicted.size() && j < actual.size()) {
    if (predicted[i] < actual[j]) ++i;
    else if (actual[j] < predicted[i]) ++j;
    else { ++inter; ++i; ++j; }
  }
  return 2.0 * static_cast<double>(inter) /
         static_cast<double>(predicted.size() + actual.size());
}

struct EvalReport {
  PredictMethod method = PredictMethod::core_degree;
  CentralityKind kind = CentralityKind::closeness;
  int m = 0;
  struct Row {
    int t = 0;
    double f1 = 0;
    std::vector<VertexId> predicted, actual;
  };
  std::vector<Row> rows;
  double mean_f1 = 0, std_f1 = 0;
  double exact_seconds = 0, predict_seconds = 0;
};

// Score a prediction method against exact per-snapshot centrality. History
// baselines consume the exact scores of up to r prior snapshots (vertices
// absent at a step score 0).
inline EvalReport evaluate_series(const SnapshotSeries& s, PredictMethod method,
                                  CentralityKind kind, int m, int r = 20) {
  using clock = std::chrono::steady_clock;
  EvalReport rep;
  rep.method = method;
  rep.kind = kind;
  rep.m = m;
  std::vector<std::map<VertexId, double>> score_history;

  for (const auto& g : s.snapshots) {
    if (g.empty()) continue;
    auto comp = largest_component(g);

    auto t0 = clock::now();
    auto scores = centrality_scores(comp, kind);
    auto actual = top_k(comp, scores, kind, m).members;
    rep.exact_seconds += std::chrono::duration<double>(clock::now() - t0).count();

    std::map<VertexId, double> score_map;
    for (std::size_t v = 0; v < comp.num_vertices(); ++v)
      score_map[comp.ids[v]] = scores[v];

    bool history_method = method == PredictMethod::uniform ||
                          method == PredictMethod::w1 || method == PredictMethod::w2;
    std::vector<VertexId> predicted;
    bool have_prediction = true;
    auto t1 = clock::now();
    switch (method) {
      case PredictMethod::core_degree:
        predicted = predict_core_degree(comp, m);
        break;
      case PredictMethod::global_degree:
        predicted = predict_global_degree(comp, m);
        break;
      default: {
        if (score_history.empty()) {
          have_prediction = false;
        } else {
          std::size_t take = std::min<std::size_t>(score_history.size(), r);
          std::vector<std::map<VertexId, double>> window(
              score_history.end() - static_cast<long>(take), score_history.end());
          HistoryWeighting w = method == PredictMethod::uniform
                                   ? HistoryWeighting::uniform
                                   : (method == PredictMethod::w1 ? HistoryWeighting::w1
                                                                  : HistoryWeighting::w2);
          predicted = predict_history_average(window, w, m);
        }
        break;
      }
    }
    rep.predict_seconds += std::chrono::duration<double>(clock::now() - t1).count();

    if (history_method) score_history.push_back(std::move(score_map));

    if (!have_prediction) continue;
    EvalReport::Row row;
    row.t = g.index;
    row.predicted = predicted;
    row.actual = actual;
    row.f1 = f1_sets(predicted, actual);
    rep.rows.push_back(std::move(row));
  }

  if (!rep.rows.empty()) {
    double mu = 0;
    for (auto& r2 : rep.rows) mu += r2.f1;
    mu /= static_cast<double>(rep.rows.size());
    double var = 0;
    for (auto& r2 : rep.rows) var += (r2.f1 - mu) * (r2.f1 - mu);
    var /= static_cast<double>(rep.rows.size());
    rep.mean_f1 = mu;
    rep.std_f1 = std::sqrt(var);
  }
  return rep;
}

}  // namespace corenet
