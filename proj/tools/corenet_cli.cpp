#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "corenet/evaluate.hpp"
#include "corenet/json_io.hpp"
#include "corenet/predict.hpp"
#include "corenet/synthgen.hpp"
#include "corenet/validate.hpp"

namespace fs = std::filesystem;
using namespace corenet;

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  return in;
}

ParseResult load_edges(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_edge_stream(in);
  } catch (const ParseError& e) {
    throw DataError(std::string(e.what()) + " (" + path + ")");
  }
}

AggregationMode mode_from_string(const std::string& s) {
  if (s == "windowed") return AggregationMode::windowed;
  if (s == "cumulative") return AggregationMode::cumulative;
  throw CLI::ValidationError("--mode must be windowed or cumulative");
}

SnapshotSeries load_series(const std::string& path, long long window,
                           const std::string& mode) {
  auto parsed = load_edges(path);
  return build_snapshots(parsed.edges, mode_from_string(mode), window);
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  if (fs::path(out).has_parent_path()) fs::create_directories(fs::path(out).parent_path());
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DataError("cannot open output file: " + out);
  f << text;
}

void write_json(const std::string& out, const Json& j) {
  write_text(out, j.dump(2) + "\n");
}

Json read_json(const std::string& path) {
  auto in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
}

CentralityKind kind_from_string(const std::string& s) {
  if (s == "closeness") return CentralityKind::closeness;
  if (s == "betweenness") return CentralityKind::betweenness;
  throw CLI::ValidationError("--kind must be closeness or betweenness");
}

const char* kind_name(CentralityKind k) {
  return k == CentralityKind::closeness ? "closeness" : "betweenness";
}

ModelClass model_class_from_string(const std::string& s) {
  if (s == "arima") return ModelClass::arima;
  if (s == "ar") return ModelClass::ar;
  if (s == "ma") return ModelClass::ma;
  if (s == "arma") return ModelClass::arma;
  throw CLI::ValidationError("--model must be one of arima|ar|ma|arma");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::vector<VertexId> random_member_set(const Snapshot& g, int m, std::uint64_t seed) {
  std::vector<VertexId> pool = g.ids;
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(m, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Forecast input: JSON object with "overlaps", a bare JSON array, or a
// whitespace-separated list of numbers.
std::vector<double> load_values(const std::string& path) {
  auto in = open_input(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<double> vals;
  try {
    auto j = Json::parse(text);
    if (j.is_object()) j = j.at("overlaps");
    vals = j.get<std::vector<double>>();
    return vals;
  } catch (const std::exception&) {
  }
  std::istringstream nums(text);
  double x;
  while (nums >> x) vals.push_back(x);
  if (vals.empty()) throw DataError("no numeric values found in " + path);
  return vals;
}

Json snapshot_summary(const SnapshotSeries& series, const ParseResult& parsed) {
  Json rows = Json::array();
  for (const auto& g : series.snapshots)
    rows.push_back(Json{{"t", g.index},
                        {"vertices", g.num_vertices()},
                        {"edges", g.edge_count}});
  return Json{{"mode", series.mode == AggregationMode::windowed ? "windowed"
                                                                : "cumulative"},
              {"window", series.window},
              {"self_loops_dropped", parsed.self_loops_dropped},
              {"snapshots", rows}};
}

Json eval_report_json(EvalReport rep, bool with_timings) {
  std::cerr << "evaluate: exact_seconds=" << rep.exact_seconds
            << " predict_seconds=" << rep.predict_seconds << "\n";
  if (!with_timings) {
    rep.exact_seconds = 0.0;
    rep.predict_seconds = 0.0;
  }
  return to_json(rep);
}

ClusterModel builtin_model() {
  // deterministic reference model trained on generated instances
  std::vector<std::string> names;
  std::vector<ParamSeries> series;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    GenSpec spec;
    spec.n = 400;
    spec.steps = 25;
    spec.profile = GenProfile::conforming;
    spec.core_size = 20;
    spec.core_density = 0.9;
    spec.churn = 0.05;
    spec.core_churn = 0.02;
    spec.seed = 100 + s;
    names.push_back("builtin-conforming-" + std::to_string(s));
    series.push_back(compute_series(generate(spec)));
  }
  for (std::uint64_t s = 1; s <= 4; ++s) {
    GenSpec spec;
    spec.n = 400;
    spec.steps = 25;
    spec.profile = GenProfile::non_conforming;
    spec.churn = 0.5;
    spec.seed = 200 + s;
    names.push_back("builtin-nonconforming-" + std::to_string(s));
    series.push_back(compute_series(generate(spec)));
  }
  return train_model(names, series);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-core structure toolkit: classify temporal networks and predict "
               "their top central vertices"};
  app.require_subcommand(1);

  // shared option storage
  std::string input, out = "-", mode = "windowed", kind_s = "closeness";
  long long window = 1;
  int m = 10, k = 10, history = 20, r = 20;
  std::uint64_t seed = 1;

  auto add_series_opts = [&](CLI::App* c, bool need_input = true) {
    auto* o = c->add_option("--input", input, "edge list file (u v t per line)");
    if (need_input) o->required();
    c->add_option("--window", window, "snapshot window width in time units");
    c->add_option("--mode", mode, "aggregation: windowed|cumulative");
  };

  // ingest
  auto* c_ingest = app.add_subcommand("ingest", "parse and summarize an edge stream");
  add_series_opts(c_ingest);
  c_ingest->add_option("--out", out, "output path (- for stdout)");
  c_ingest->callback([&] {
    auto parsed = load_edges(input);
    std::set<VertexId> vs;
    long long t_min = parsed.edges.front().t, t_max = t_min;
    for (const auto& e : parsed.edges) {
      vs.insert(e.u);
      vs.insert(e.v);
      t_min = std::min(t_min, e.t);
      t_max = std::max(t_max, e.t);
    }
    write_json(out, Json{{"edges", parsed.edges.size()},
                         {"self_loops_dropped", parsed.self_loops_dropped},
                         {"vertices", vs.size()},
                         {"t_min", t_min},
                         {"t_max", t_max}});
  });

  // snapshot
  auto* c_snapshot = app.add_subcommand("snapshot", "build and summarize snapshots");
  add_series_opts(c_snapshot);
  c_snapshot->add_option("--out", out, "output path");
  c_snapshot->callback([&] {
    auto parsed = load_edges(input);
    auto series = build_snapshots(parsed.edges, mode_from_string(mode), window);
    write_json(out, snapshot_summary(series, parsed));
  });

  // params
  std::string cfx_mode = "shell";
  auto* c_params = app.add_subcommand("params", "compute the EF/CFX/ED/CV series");
  add_series_opts(c_params);
  c_params->add_option("--cfx-mode", cfx_mode, "CFX denominator: shell|core");
  c_params->add_option("--out", out, "output path");
  c_params->callback([&] {
    auto series = load_series(input, window, mode);
    CfxMode cm = cfx_mode == "core" ? CfxMode::core : CfxMode::shell;
    write_json(out, to_json(compute_series(series, cm)));
  });

  // classify train / assign
  auto* c_classify = app.add_subcommand("classify", "train or apply the G/B classifier");
  c_classify->require_subcommand(1);
  std::vector<std::string> param_files;
  std::vector<std::string> names;
  std::string model_path;
  auto* c_train = c_classify->add_subcommand("train", "train centroids from param series");
  c_train->add_option("--params", param_files, "param-series JSON files (>= 2)")
      ->required()
      ->expected(-2);
  c_train->add_option("--names", names, "network names (defaults to file stems)");
  c_train->add_option("--out", out, "model output path");
  c_train->callback([&] {
    std::vector<ParamSeries> series;
    for (const auto& f : param_files) series.push_back(param_series_from_json(read_json(f)));
    std::vector<std::string> use_names = names;
    if (use_names.empty())
      for (const auto& f : param_files) use_names.push_back(fs::path(f).stem().string());
    write_json(out, to_json(train_model(use_names, series)));
  });
  auto* c_assign = c_classify->add_subcommand("assign", "Rocchio-assign one network");
  c_assign->add_option("--model", model_path, "trained model JSON")->required();
  c_assign->add_option("--params", param_files, "param-series JSON file")
      ->required()
      ->expected(1);
  c_assign->add_option("--out", out, "output path");
  c_assign->callback([&] {
    auto model = cluster_model_from_json(read_json(model_path));
    auto series = param_series_from_json(read_json(param_files.front()));
    write_json(out, to_json(rocchio_assign(model, series)));
  });

  // centrality
  auto* c_centrality =
      app.add_subcommand("centrality", "exact top-k centrality and overlap series");
  add_series_opts(c_centrality);
  c_centrality->add_option("--kind", kind_s, "closeness|betweenness");
  c_centrality->add_option("--k", k, "top-k set size");
  c_centrality->add_option("--out", out, "output path");
  c_centrality->callback([&] {
    auto series = load_series(input, window, mode);
    auto ck = kind_from_string(kind_s);
    Json tops = Json::array();
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      auto sc = centrality_scores(comp, ck);
      tops.push_back(Json{{"t", g.index}, {"members", top_k(comp, sc, ck, k).members}});
    }
    write_json(out, Json{{"kind", kind_s},
                         {"k", k},
                         {"tops", tops},
                         {"overlaps", overlap_series(series, ck, k)}});
  });

  // forecast
  std::string model_class = "arima";
  bool recursive = false;
  auto* c_forecast =
      app.add_subcommand("forecast", "rolling ARIMA forecast of an overlap series");
  c_forecast->add_option("--input", input, "overlap series (JSON or numbers)")->required();
  c_forecast->add_option("--history", history, "sliding window length");
  c_forecast->add_option("--model", model_class, "arima|ar|ma|arma");
  c_forecast->add_flag("--recursive", recursive, "feed forecasts back into the window");
  c_forecast->add_option("--out", out, "output path");
  c_forecast->callback([&] {
    auto values = load_values(input);
    auto rep = rolling_evaluate(values, history, recursive,
                                model_class_from_string(model_class));
    write_json(out, to_json(rep));
  });

  // predict
  std::string method_s = "core-degree", degree_mode = "full";
  auto* c_predict = app.add_subcommand("predict", "predict top-m central vertices");
  add_series_opts(c_predict);
  c_predict->add_option("--method", method_s,
                        "core-degree|global-degree|uniform|w1|w2");
  c_predict->add_option("--m", m, "prediction set size");
  c_predict->add_option("--r", r, "history steps for the baselines");
  c_predict->add_option("--kind", kind_s, "centrality kind scored by the baselines");
  c_predict->add_option("--degree", degree_mode, "core-degree ranking: full|induced");
  c_predict->add_option("--out", out, "output path");
  c_predict->callback([&] {
    auto series = load_series(input, window, mode);
    auto method = method_from_string(method_s);
    auto ck = kind_from_string(kind_s);
    bool induced = degree_mode == "induced";
    if (degree_mode != "full" && degree_mode != "induced")
      throw CLI::ValidationError("--degree must be full or induced");
    Json rows = Json::array();
    std::vector<std::map<VertexId, double>> score_history;
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      std::vector<VertexId> members;
      bool have = true;
      switch (method) {
        case PredictMethod::core_degree:
          members = predict_core_degree(comp, m, induced);
          break;
        case PredictMethod::global_degree:
          members = predict_global_degree(comp, m);
          break;
        default: {
          if (score_history.empty()) {
            have = false;
          } else {
            std::size_t take = std::min<std::size_t>(score_history.size(), r);
            std::vector<std::map<VertexId, double>> win(
                score_history.end() - static_cast<long>(take), score_history.end());
            HistoryWeighting w = method == PredictMethod::uniform
                                     ? HistoryWeighting::uniform
                                     : (method == PredictMethod::w1
                                            ? HistoryWeighting::w1
                                            : HistoryWeighting::w2);
            members = predict_history_average(win, w, m);
          }
          break;
        }
      }
      if (method == PredictMethod::uniform || method == PredictMethod::w1 ||
          method == PredictMethod::w2) {
        auto sc = centrality_scores(comp, ck);
        std::map<VertexId, double> score_map;
        for (std::size_t v = 0; v < comp.num_vertices(); ++v)
          score_map[comp.ids[v]] = sc[v];
        score_history.push_back(std::move(score_map));
      }
      if (have) rows.push_back(Json{{"t", g.index}, {"members", members}});
    }
    write_json(out, Json{{"method", method_s}, {"m", m}, {"rows", rows}});
  });

  // evaluate
  bool with_timings = false;
  auto* c_evaluate =
      app.add_subcommand("evaluate", "F1 of a prediction method vs exact centrality");
  add_series_opts(c_evaluate);
  c_evaluate->add_option("--method", method_s, "prediction method");
  c_evaluate->add_option("--kind", kind_s, "closeness|betweenness");
  c_evaluate->add_option("--m", m, "set size");
  c_evaluate->add_option("--r", r, "history steps for the baselines");
  c_evaluate->add_flag("--timings", with_timings,
                       "include wall-clock timings in the JSON output");
  c_evaluate->add_option("--out", out, "output path");
  c_evaluate->callback([&] {
    auto series = load_series(input, window, mode);
    auto rep = evaluate_series(series, method_from_string(method_s),
                               kind_from_string(kind_s), m, r);
    write_json(out, eval_report_json(std::move(rep), with_timings));
  });

  // validate spread|diameter|cc
  auto* c_validate = app.add_subcommand("validate", "flooding / diameter / CC checks");
  c_validate->require_subcommand(1);
  std::size_t pair_budget = 100000;
  auto add_validate_opts = [&](CLI::App* c) {
    add_series_opts(c);
    c->add_option("--m", m, "seed / removal set size");
    c->add_option("--seed", seed, "random control-set seed");
    c->add_option("--out", out, "output path");
  };
  auto* c_spread = c_validate->add_subcommand(
      "spread", "flood rounds: actual vs predicted vs random seed sets");
  add_validate_opts(c_spread);
  c_spread->callback([&] {
    auto series = load_series(input, window, mode);
    Json rows = Json::array();
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      auto sc = centrality_scores(comp, CentralityKind::closeness);
      auto actual = top_k(comp, sc, CentralityKind::closeness, m).members;
      auto predicted = predict_core_degree(comp, m);
      auto random = random_member_set(comp, m, seed + static_cast<std::uint64_t>(g.index));
      rows.push_back(Json{{"t", g.index},
                          {"actual_rounds", spread_rounds(comp, actual).rounds},
                          {"predicted_rounds", spread_rounds(comp, predicted).rounds},
                          {"random_rounds", spread_rounds(comp, random).rounds}});
    }
    write_json(out, Json{{"m", m}, {"rows", rows}});
  });
  auto* c_diameter = c_validate->add_subcommand(
      "diameter", "diameter after removing actual vs predicted vs random sets");
  add_validate_opts(c_diameter);
  c_diameter->callback([&] {
    auto series = load_series(input, window, mode);
    Json rows = Json::array();
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      auto sc = centrality_scores(comp, CentralityKind::betweenness);
      auto actual = top_k(comp, sc, CentralityKind::betweenness, m).members;
      auto predicted = predict_core_degree(comp, m);
      auto random = random_member_set(comp, m, seed + static_cast<std::uint64_t>(g.index));
      rows.push_back(Json{{"t", g.index},
                          {"base", exact_diameter(comp)},
                          {"actual_removed", diameter_after_removal(comp, actual)},
                          {"predicted_removed", diameter_after_removal(comp, predicted)},
                          {"random_removed", diameter_after_removal(comp, random)}});
    }
    write_json(out, Json{{"m", m}, {"rows", rows}});
  });
  auto* c_cc = c_validate->add_subcommand("cc", "core-connectedness report");
  add_validate_opts(c_cc);
  c_cc->add_option("--pair-budget", pair_budget, "max sampled vertex pairs");
  c_cc->callback([&] {
    auto series = load_series(input, window, mode);
    Json rows = Json::array();
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      auto d = find_core(comp);
      auto rep = cc_check(comp, d, pair_budget, seed);
      Json row = to_json(rep);
      row["t"] = g.index;
      rows.push_back(row);
    }
    write_json(out, Json{{"rows", rows}});
  });

  // synth
  GenSpec gspec;
  std::string profile = "conforming";
  auto* c_synth = app.add_subcommand("synth", "generate a synthetic temporal network");
  c_synth->add_option("--profile", profile, "conforming|non-conforming");
  c_synth->add_option("--n", gspec.n, "vertex count");
  c_synth->add_option("--steps", gspec.steps, "snapshot count");
  c_synth->add_option("--core-size", gspec.core_size, "planted core size");
  c_synth->add_option("--core-density", gspec.core_density, "planted core edge density");
  c_synth->add_option("--churn", gspec.churn, "per-step periphery churn fraction");
  c_synth->add_option("--core-churn", gspec.core_churn, "per-step core member churn");
  c_synth->add_option("--decoy-hubs", gspec.decoy_hubs, "high-degree periphery decoys");
  c_synth->add_option("--seed", gspec.seed, "generator seed");
  c_synth->add_option("--out", out, "edge list output path");
  c_synth->callback([&] {
    if (profile == "conforming")
      gspec.profile = GenProfile::conforming;
    else if (profile == "non-conforming")
      gspec.profile = GenProfile::non_conforming;
    else
      throw CLI::ValidationError("--profile must be conforming or non-conforming");
    std::ostringstream os;
    write_edge_list(generate(gspec), os);
    write_text(out, os.str());
  });

  // pipeline
  bool force_predict = false;
  std::string out_dir = "runs";
  auto* c_pipeline = app.add_subcommand(
      "pipeline", "classify, then forecast + predict + evaluate when Good");
  add_series_opts(c_pipeline);
  c_pipeline->add_option("--m", m, "prediction set size");
  c_pipeline->add_option("--k", k, "overlap top-k size");
  c_pipeline->add_option("--history", history, "forecast window length");
  c_pipeline->add_option("--kind", kind_s, "closeness|betweenness");
  c_pipeline->add_option("--seed", seed, "seed for derived randomness");
  c_pipeline->add_option("--model", model_path, "trained classifier model JSON");
  c_pipeline->add_flag("--force-predict", force_predict,
                       "run prediction even on a Bad-classified network");
  c_pipeline->add_option("--out", out_dir, "run directory root");
  c_pipeline->callback([&] {
    std::ostringstream cfg;
    cfg << "v1|input=" << input << "|window=" << window << "|mode=" << mode
        << "|m=" << m << "|k=" << k << "|history=" << history << "|kind=" << kind_s
        << "|seed=" << seed << "|model=" << model_path
        << "|force=" << (force_predict ? 1 : 0);
    std::string run_id = hex16(fnv1a(cfg.str()));
    fs::path run_dir = fs::path(out_dir) / run_id;
    fs::create_directories(run_dir);
    std::cerr << "pipeline: run dir " << run_dir.string() << "\n";
    auto stage_path = [&](const char* name) { return (run_dir / name).string(); };

    auto parsed = load_edges(input);
    auto series = build_snapshots(parsed.edges, mode_from_string(mode), window);
    write_json(stage_path("snapshots.json"), snapshot_summary(series, parsed));

    // params (cached)
    ParamSeries ps;
    if (fs::exists(stage_path("params.json"))) {
      ps = param_series_from_json(read_json(stage_path("params.json")));
    } else {
      ps = compute_series(series);
      write_json(stage_path("params.json"), to_json(ps));
    }

    ClusterModel model =
        model_path.empty() ? builtin_model()
                           : cluster_model_from_json(read_json(model_path));
    write_json(stage_path("model.json"), to_json(model));
    auto cat = rocchio_assign(model, ps);
    write_json(stage_path("category.json"), to_json(cat));

    Json report{{"config", cfg.str()},
                {"run_id", run_id},
                {"labels", cat.label_string()},
                {"verdict", cat.good ? "Good" : "Bad"}};
    bool run_prediction = cat.good || force_predict;
    if (!run_prediction) {
      report["prediction_skipped"] = true;
      report["note"] =
          "network classified Bad: top-core membership is not informative, "
          "prediction would not beat a random selection; rerun with "
          "--force-predict to override";
      write_json(stage_path("report.json"), report);
      write_json("-", report);
      return;
    }
    if (!cat.good) report["forced"] = true;

    auto ck = kind_from_string(kind_s);
    std::vector<double> overlaps;
    if (fs::exists(stage_path("overlap.json"))) {
      overlaps = read_json(stage_path("overlap.json"))
                     .at("overlaps")
                     .get<std::vector<double>>();
    } else {
      overlaps = overlap_series(series, ck, k);
      write_json(stage_path("overlap.json"),
                 Json{{"kind", kind_s}, {"k", k}, {"overlaps", overlaps}});
    }

    if (static_cast<int>(overlaps.size()) > history) {
      auto fc = rolling_evaluate(overlaps, history, false);
      write_json(stage_path("forecast.json"), to_json(fc));
      report["forecast_mean_error"] = fc.mean_error;
    } else {
      report["forecast_skipped"] =
          "overlap series not longer than the forecast history";
    }

    Json pred_rows = Json::array();
    for (const auto& g : series.snapshots) {
      if (g.empty()) continue;
      auto comp = largest_component(g);
      pred_rows.push_back(
          Json{{"t", g.index}, {"members", predict_core_degree(comp, m)}});
    }
    write_json(stage_path("predictions.json"),
               Json{{"method", "core-degree"}, {"m", m}, {"rows", pred_rows}});

    auto rep = evaluate_series(series, PredictMethod::core_degree, ck, m);
    write_json(stage_path("evaluate.json"), eval_report_json(std::move(rep), false));
    report["mean_f1"] = read_json(stage_path("evaluate.json")).at("mean_f1");
    write_json(stage_path("report.json"), report);
    write_json("-", report);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "stage failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
