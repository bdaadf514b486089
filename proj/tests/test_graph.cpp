#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "corenet/graph.hpp"
#include "oracles.hpp"

using namespace corenet;

TEST_CASE("parse_edge_stream basic") {
  std::istringstream in("1 2 10\n2 3 11");
  auto r = parse_edge_stream(in);
  REQUIRE(r.edges.size() == 2);
  CHECK(r.edges[0].u == 1);
  CHECK(r.edges[0].v == 2);
  CHECK(r.edges[0].t == 10);
  CHECK(r.edges[1].t == 11);
  CHECK(r.self_loops_dropped == 0);
}

TEST_CASE("parse_edge_stream drops self loops and comments") {
  std::istringstream in("# header\n5 5 3\n5 6 3\n% trailer\n");
  auto r = parse_edge_stream(in);
  REQUIRE(r.edges.size() == 1);
  CHECK(r.edges[0].u == 5);
  CHECK(r.edges[0].v == 6);
  CHECK(r.self_loops_dropped == 1);
}

TEST_CASE("parse_edge_stream rejects malformed lines") {
  std::istringstream in("1 2");
  CHECK_THROWS_WITH(parse_edge_stream(in),
                    Catch::Matchers::ContainsSubstring("line 1"));
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_edge_stream(empty), ParseError);
}

TEST_CASE("build_snapshots windowed") {
  std::vector<TemporalEdge> edges{{1, 2, 0}, {2, 3, 5}};
  auto s = build_snapshots(edges, AggregationMode::windowed, 10);
  REQUIRE(s.snapshots.size() == 1);
  CHECK(s.snapshots[0].edge_count == 2);

  std::vector<TemporalEdge> edges2{{1, 2, 0}, {2, 3, 15}};
  auto s2 = build_snapshots(edges2, AggregationMode::windowed, 10);
  REQUIRE(s2.snapshots.size() == 2);
  CHECK(s2.snapshots[0].edge_count == 1);
  CHECK(s2.snapshots[0].index_of(1) >= 0);
  CHECK(s2.snapshots[1].index_of(3) >= 0);
  CHECK(s2.snapshots[1].index_of(1) == -1);
}

TEST_CASE("build_snapshots cumulative grows monotonically") {
  std::vector<TemporalEdge> edges{{1, 2, 0}, {2, 3, 15}};
  auto s = build_snapshots(edges, AggregationMode::cumulative, 10);
  REQUIRE(s.snapshots.size() == 2);
  CHECK(s.snapshots[0].edge_count == 1);
  CHECK(s.snapshots[1].edge_count == 2);
  CHECK(s.snapshots[1].index_of(1) >= 0);
}

TEST_CASE("duplicate temporal edges collapse within a window") {
  std::vector<TemporalEdge> edges{{1, 2, 0}, {2, 1, 3}, {1, 2, 4}};
  auto s = build_snapshots(edges, AggregationMode::windowed, 10);
  REQUIRE(s.snapshots.size() == 1);
  CHECK(s.snapshots[0].edge_count == 1);
}

TEST_CASE("empty windows are retained") {
  std::vector<TemporalEdge> edges{{1, 2, 0}, {2, 3, 25}};
  auto s = build_snapshots(edges, AggregationMode::windowed, 10);
  REQUIRE(s.snapshots.size() == 3);
  CHECK(s.snapshots[1].empty());
}

TEST_CASE("degree sum equals twice edge count") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = oracle::random_graph(40, 0.1, seed, false);
    std::size_t total = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) total += g.adj[v].size();
    CHECK(total == 2 * g.edge_count);
  }
}

TEST_CASE("largest_component") {
  SECTION("connected triangle is unchanged") {
    auto g = Snapshot::from_edge_set(0, {{1, 2}, {2, 3}, {1, 3}});
    auto c = largest_component(g);
    CHECK(c.num_vertices() == 3);
    CHECK(c.edge_count == 3);
  }
  SECTION("triangle beats isolated edge") {
    auto g = Snapshot::from_edge_set(0, {{1, 2}, {2, 3}, {1, 3}, {7, 8}});
    auto c = largest_component(g);
    CHECK(c.num_vertices() == 3);
    CHECK(c.index_of(7) == -1);
  }
  SECTION("tie broken by smallest min vertex id") {
    auto g = Snapshot::from_edge_set(0, {{3, 4}, {1, 2}});
    auto c = largest_component(g);
    REQUIRE(c.num_vertices() == 2);
    CHECK(c.index_of(1) >= 0);
    CHECK(c.index_of(2) >= 0);
  }
}

TEST_CASE("snapshot rebuild is deterministic") {
  std::string text = "4 7 3\n1 2 0\n2 3 1\n7 4 3\n3 1 2\n";
  std::istringstream a(text), b(text);
  auto sa = build_snapshots(parse_edge_stream(a).edges, AggregationMode::windowed, 2);
  auto sb = build_snapshots(parse_edge_stream(b).edges, AggregationMode::windowed, 2);
  REQUIRE(sa.snapshots.size() == sb.snapshots.size());
  for (std::size_t i = 0; i < sa.snapshots.size(); ++i) {
    CHECK(sa.snapshots[i].ids == sb.snapshots[i].ids);
    CHECK(sa.snapshots[i].adj == sb.snapshots[i].adj);
  }
}
