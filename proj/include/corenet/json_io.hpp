#pragma once

#include <json.hpp>

#include "corenet/classify.hpp"
#include "corenet/evaluate.hpp"
#include "corenet/forecast.hpp"
#include "corenet/params.hpp"
#include "corenet/validate.hpp"

namespace corenet {

using Json = nlohmann::ordered_json;

inline Json to_json(const ParamSeries& s) {
  Json rows = Json::array();
  for (const auto& t : s.tuples) {
    Json row{{"t", t.t}, {"ef", t.ef}, {"cfx", t.cfx}, {"ed", t.ed}};
    if (t.cv) row["cv"] = *t.cv;
    else row["cv"] = nullptr;
    rows.push_back(row);
  }
  return Json{{"tuples", rows},
              {"ef_values", s.ef_values},
              {"cfx_values", s.cfx_values},
              {"ed_values", s.ed_values},
              {"cv_values", s.cv_values},
              {"skipped_empty", s.skipped_empty}};
}

inline ParamSeries param_series_from_json(const Json& j) {
  ParamSeries s;
  for (const auto& row : j.at("tuples")) {
    ParamTuple t;
    t.t = row.at("t").get<int>();
    t.ef = row.at("ef").get<double>();
    t.cfx = row.at("cfx").get<double>();
    t.ed = row.at("ed").get<double>();
    if (!row.at("cv").is_null()) t.cv = row.at("cv").get<double>();
    s.tuples.push_back(t);
  }
  s.ef_values = j.at("ef_values").get<std::vector<double>>();
  s.cfx_values = j.at("cfx_values").get<std::vector<double>>();
  s.ed_values = j.at("ed_values").get<std::vector<double>>();
  s.cv_values = j.at("cv_values").get<std::vector<double>>();
  s.skipped_empty = j.at("skipped_empty").get<std::vector<int>>();
  return s;
}

inline Json to_json(const EmpiricalCdf& c) {
  return Json{{"support", c.support}, {"cumulative", c.cumulative}};
}

inline EmpiricalCdf cdf_from_json(const Json& j) {
  EmpiricalCdf c;
  c.support = j.at("support").get<std::vector<double>>();
  c.cumulative = j.at("cumulative").get<std::vector<double>>();
  return c;
}

inline Json to_json(const ClusterModel& m) {
  Json params = Json::object();
  for (int k = 0; k < 4; ++k) {
    const auto& pm = m.params[static_cast<std::size_t>(k)];
    params[param_name(static_cast<ParamKind>(k))] =
        Json{{"members_good", pm.members_good},
             {"members_bad", pm.members_bad},
             {"centroid_good", to_json(pm.centroid_good)},
             {"centroid_bad", to_json(pm.centroid_bad)},
             {"mean_good", pm.mean_good},
             {"mean_bad", pm.mean_bad}};
  }
  return Json{{"network_names", m.network_names}, {"params", params}};
}

inline ClusterModel cluster_model_from_json(const Json& j) {
  ClusterModel m;
  m.network_names = j.at("network_names").get<std::vector<std::string>>();
  for (int k = 0; k < 4; ++k) {
    const auto& pj = j.at("params").at(param_name(static_cast<ParamKind>(k)));
    auto& pm = m.params[static_cast<std::size_t>(k)];
    pm.members_good = pj.at("members_good").get<std::vector<int>>();
    pm.members_bad = pj.at("members_bad").get<std::vector<int>>();
    pm.centroid_good = cdf_from_json(pj.at("centroid_good"));
    pm.centroid_bad = cdf_from_json(pj.at("centroid_bad"));
    pm.mean_good = pj.at("mean_good").get<double>();
    pm.mean_bad = pj.at("mean_bad").get<double>();
  }
  return m;
}

inline Json to_json(const Category& c) {
  return Json{{"labels", c.label_string()},
              {"verdict", c.good ? "Good" : "Bad"},
              {"equidistant",
               std::vector<bool>(c.equidistant.begin(), c.equidistant.end())}};
}

inline Json to_json(const ForecastModel& m) {
  return Json{{"p", m.p},         {"d", m.d},
              {"q", m.q},         {"ar", m.ar},
              {"ma", m.ma},       {"intercept", m.intercept},
              {"aic", m.aic},     {"fallback", m.fallback}};
}

inline Json to_json(const RollingReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"t", row.t}, {"actual", row.actual}, {"predicted", row.predicted}};
    if (std::isnan(row.error_pct)) jr["error_pct"] = nullptr;
    else jr["error_pct"] = row.error_pct;
    rows.push_back(jr);
  }
  return Json{{"history", r.history},
              {"recursive", r.recursive},
              {"rows", rows},
              {"mean_error", r.mean_error},
              {"std_error", r.std_error},
              {"skipped_zero", r.skipped_zero}};
}

inline Json to_json(const EvalReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"t", row.t},
                        {"f1", row.f1},
                        {"predicted", row.predicted},
                        {"actual", row.actual}});
  return Json{{"method", method_name(r.method)},
              {"kind", r.kind == CentralityKind::closeness ? "closeness" : "betweenness"},
              {"m", r.m},
              {"rows", rows},
              {"mean_f1", r.mean_f1},
              {"std_f1", r.std_f1},
              {"exact_seconds", r.exact_seconds},
              {"predict_seconds", r.predict_seconds}};
}

inline Json to_json(const CcReport& r) {
  return Json{{"is_core_connected", r.is_core_connected},
              {"cc_strength", r.cc_strength},
              {"pairs_examined", r.pairs_examined},
              {"identity_violations", r.identity_violations}};
}

}  // namespace corenet
