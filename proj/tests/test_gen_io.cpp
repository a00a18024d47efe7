#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "trailcover/trailcover.hpp"

namespace tc = trailcover;

TEST_CASE("bounded uniform draw") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const auto x = tc::rng_below(rng, 7);
    CHECK(x < 7);
  }
  CHECK_THROWS_AS(tc::rng_below(rng, 0), std::invalid_argument);

  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(tc::rng_below(a, 13) == tc::rng_below(b, 13));
}

TEST_CASE("random multigraph generator") {
  const auto g = tc::random_multigraph(6, 12, 3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  for (int e = 0; e < g.edge_count(); ++e) CHECK_FALSE(g.is_loop(e));

  bool saw_loop = false;
  for (std::uint64_t seed = 0; seed < 50 && !saw_loop; ++seed) {
    const auto gl = tc::random_multigraph(3, 15, seed, /*allow_loops=*/true);
    for (int e = 0; e < gl.edge_count(); ++e)
      if (gl.is_loop(e)) saw_loop = true;
  }
  CHECK(saw_loop);

  SECTION("determinism") {
    const auto a = tc::random_multigraph(8, 20, 11);
    const auto b = tc::random_multigraph(8, 20, 11);
    CHECK(a == b);
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(tc::random_multigraph(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::random_multigraph(-2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::random_multigraph(3, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::random_multigraph(1, 2, 0), std::invalid_argument);
    CHECK(tc::random_multigraph(1, 2, 0, true).edge_count() == 2);
  }
}

TEST_CASE("random subcubic generator") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = tc::random_subcubic(8, 12, seed);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(tc::is_subcubic(g));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges()) {
      if (u > v) std::swap(u, v);
      CHECK(u != v);
      CHECK(seen.insert({u, v}).second);
    }
  }

  CHECK(tc::random_subcubic(8, 1, 4) == tc::random_subcubic(8, 1, 4));

  SECTION("infeasible edge counts") {
    CHECK_THROWS_AS(tc::random_subcubic(4, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::random_subcubic(3, 4, 0), std::invalid_argument);
    CHECK(tc::random_subcubic(4, 6, 0).edge_count() == 6);
  }
}

TEST_CASE("random instance generator") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = static_cast<int>(2 + seed % 12);
    const int m = n - 1 + static_cast<int>(seed % 15);
    const auto inst = tc::random_instance(n, m, seed);
    CHECK(inst.graph.vertex_count() == n);
    CHECK(inst.graph.edge_count() == m);

    const auto h = tc::instance_subgraph(inst);
    CHECK(tc::is_connected(h));
    CHECK(std::is_sorted(inst.h_vertices.begin(), inst.h_vertices.end()));
    CHECK(std::is_sorted(inst.h_edges.begin(), inst.h_edges.end()));

    // The host stays connected: it grew from a spanning tree.
    const auto lab = tc::components(inst.graph);
    for (int v = 0; v < n; ++v) CHECK(lab[static_cast<std::size_t>(v)] == 0);
  }

  SECTION("determinism") {
    const auto a = tc::random_instance(10, 20, 77);
    const auto b = tc::random_instance(10, 20, 77);
    CHECK(a.graph == b.graph);
    CHECK(a.h_vertices == b.h_vertices);
    CHECK(a.h_edges == b.h_edges);
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(tc::random_instance(1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::random_instance(5, 3, 0), std::invalid_argument);
  }
}

TEST_CASE("round trips survive random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = tc::random_multigraph(1 + seed % 7, seed % 12, seed,
                                         /*allow_loops=*/true);
    const auto back = tc::parse_graph_text(tc::serialize_graph(g));
    CHECK(back == g);
  }
}

TEST_CASE("subgraph parser validates against its host") {
  const auto k4 = th::complete_graph(4);
  CHECK_THROWS_AS(tc::parse_subgraph_text("v 9\n", k4), tc::ParseError);
  CHECK_THROWS_AS(tc::parse_subgraph_text("s 11\n", k4), tc::ParseError);
  CHECK_THROWS_AS(tc::parse_subgraph_text("x 1\n", k4), tc::ParseError);
  const auto empty = tc::parse_subgraph_text("", k4);
  CHECK(empty.vertices().empty());
  CHECK(empty.edge_ids().empty());
}

TEST_CASE("trail parser accepts ids the verifier can reject") {
  const auto k4 = th::complete_graph(4);
  const auto t = tc::parse_trail_text("t closed 0\ne 42\n", k4);
  CHECK(t.steps == std::vector<int>{42});
  const auto r =
      tc::verify_trail(th::whole_sub(k4), t, tc::Mode::closed);
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostic == "edge id out of range");

  CHECK_THROWS_AS(tc::parse_trail_text("t sideways 0\ne 1\n", k4),
                  tc::ParseError);
  CHECK_THROWS_AS(tc::parse_trail_text("e 1\n", k4), tc::ParseError);
}

TEST_CASE("mode names") {
  CHECK(tc::parse_mode("closed") == tc::Mode::closed);
  CHECK(tc::parse_mode("open") == tc::Mode::open);
  CHECK_THROWS_AS(tc::parse_mode("loop"), tc::ParseError);
  CHECK(tc::to_string(tc::Mode::closed) == "closed");
  CHECK(tc::to_string(tc::Mode::open) == "open");
}
