#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "corenet/classify.hpp"
#include "corenet/synthgen.hpp"

using namespace corenet;

namespace {

GenSpec conforming_spec(std::uint64_t seed, int n = 500) {
  GenSpec s;
  s.n = n;
  s.steps = 25;
  s.profile = GenProfile::conforming;
  s.core_size = 20;
  s.core_density = 0.9;
  s.churn = 0.05;
  s.core_churn = 0.02;
  s.seed = seed;
  return s;
}

GenSpec non_conforming_spec(std::uint64_t seed, int n = 500) {
  GenSpec s;
  s.n = n;
  s.steps = 25;
  s.profile = GenProfile::non_conforming;
  s.churn = 0.5;
  s.seed = seed;
  return s;
}

double mean_of(const std::vector<double>& xs) {
  double t = 0;
  for (double x : xs) t += x;
  return xs.empty() ? 0.0 : t / xs.size();
}

}  // namespace

TEST_CASE("generation is deterministic for a fixed seed") {
  for (auto spec : {conforming_spec(3, 200), non_conforming_spec(3, 200)}) {
    std::ostringstream a, b;
    write_edge_list(generate(spec), a);
    write_edge_list(generate(spec), b);
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
  }
  // different seeds diverge
  std::ostringstream a, b;
  write_edge_list(generate(conforming_spec(1, 200)), a);
  write_edge_list(generate(conforming_spec(2, 200)), b);
  CHECK(a.str() != b.str());
}

TEST_CASE("generated snapshots are simple and within the id range") {
  auto series = generate(conforming_spec(5, 300));
  REQUIRE(series.snapshots.size() == 25);
  for (const auto& g : series.snapshots) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      REQUIRE(g.ids[v] >= 0);
      REQUIRE(g.ids[v] < 300);
      for (int w : g.adj[v]) REQUIRE(w != static_cast<int>(v));
      REQUIRE(std::is_sorted(g.adj[v].begin(), g.adj[v].end()));
      REQUIRE(std::adjacent_find(g.adj[v].begin(), g.adj[v].end()) == g.adj[v].end());
    }
  }
}

TEST_CASE("conforming snapshots are dominated by one component") {
  auto series = generate(conforming_spec(7));
  for (const auto& g : series.snapshots) {
    auto comp = largest_component(g);
    REQUIRE(comp.num_vertices() >= 0.9 * g.num_vertices());
  }
}

TEST_CASE("conforming profile scores high ED and CV") {
  auto series = generate(conforming_spec(11));
  auto ps = compute_series(series);
  CHECK(mean_of(ps.ed_values) > 0.8);
  CHECK(mean_of(ps.cv_values) > 0.8);
  CHECK(mean_of(ps.ef_values) > 0.5);
  CHECK(mean_of(ps.cfx_values) < 0.5);
}

TEST_CASE("non-conforming profile with heavy churn scores low CV") {
  auto series = generate(non_conforming_spec(13));
  auto ps = compute_series(series);
  CHECK(mean_of(ps.cv_values) < 0.3);
}

TEST_CASE("profile separation under a trained 4+4 model") {
  std::vector<std::string> names;
  std::vector<ParamSeries> series;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    names.push_back("conf" + std::to_string(s));
    series.push_back(compute_series(generate(conforming_spec(s, 400))));
  }
  for (std::uint64_t s = 1; s <= 4; ++s) {
    names.push_back("nonconf" + std::to_string(s));
    series.push_back(compute_series(generate(non_conforming_spec(s, 400))));
  }
  auto model = train_model(names, series);
  for (int i = 0; i < 4; ++i) {
    auto cat = rocchio_assign(model, series[i]);
    CHECK(cat.label_string() == "GGGG");
    CHECK(cat.good);
  }
  for (int i = 4; i < 8; ++i) {
    auto cat = rocchio_assign(model, series[i]);
    int b = 0;
    for (char c : cat.labels)
      if (c == 'B') ++b;
    CHECK(b >= 3);
    CHECK_FALSE(cat.good);
  }
}

TEST_CASE("infeasible specs are rejected") {
  GenSpec s;
  s.n = 5;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = GenSpec{};
  s.steps = 1;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = GenSpec{};
  s.core_size = s.n;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = GenSpec{};
  s.core_density = 0.05;  // too sparse to stay the top core
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = GenSpec{};
  s.churn = 1.5;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
}

TEST_CASE("edge-list export format") {
  GenSpec s = conforming_spec(1, 100);
  s.steps = 2;
  auto series = generate(s);
  std::ostringstream out;
  write_edge_list(series, out);
  std::istringstream in(out.str());
  long long u, v, t;
  std::size_t lines = 0, expect = 0;
  for (const auto& g : series.snapshots) expect += g.edge_count;
  while (in >> u >> v >> t) {
    REQUIRE(u < v);
    REQUIRE((t == 0 || t == 1));
    ++lines;
  }
  CHECK(lines == expect);
}
