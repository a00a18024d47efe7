#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "trailcover/trailcover.hpp"

namespace tc = trailcover;

namespace {

bool graph_connected(const tc::Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto lab = tc::components(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (lab[static_cast<std::size_t>(v)] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("connected simple graph counts per order") {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    CHECK(tc::connected_graphs(n).size() ==
          static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("connected subcubic graph counts per order") {
  const int expected[] = {1, 1, 2, 6, 10, 29, 64, 194};
  for (int n = 1; n <= 8; ++n)
    CHECK(tc::connected_graphs(n, 3).size() ==
          static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("degree-capped enumeration equals filtering the full one") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t filtered = 0;
    for (const auto& g : tc::connected_graphs(n))
      if (tc::is_subcubic(g)) ++filtered;
    CHECK(tc::connected_graphs(n, 3).size() == filtered);
  }
}

TEST_CASE("enumerated graphs are connected, simple, and pairwise distinct") {
  for (int n : {4, 5, 6}) {
    std::set<std::uint64_t> hashes;
    for (const auto& g : tc::connected_graphs(n)) {
      CHECK(g.vertex_count() == n);
      CHECK(graph_connected(g));
      std::set<std::pair<int, int>> seen;
      for (const auto& e : g.edges()) {
        CHECK(e.first < e.second);  // simple: no loops, normalized order
        CHECK(seen.insert(e).second);
      }
      hashes.insert(tc::graph_hash(g));
    }
    CHECK(hashes.size() == tc::connected_graphs(n).size());
  }
}

TEST_CASE("edge cap restricts to spanning trees at the minimum") {
  // Connecting 4 vertices needs 3 edges; exactly two trees exist on 4
  // unlabeled vertices (the path and the star).
  CHECK(tc::connected_graphs(4, -1, 3).size() == 2);
  CHECK(tc::connected_graphs(5, -1, 4).size() == 3);
}

TEST_CASE("degree cap is honored") {
  for (const auto& g : tc::connected_graphs(6, 3)) {
    int max_deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      max_deg = std::max(max_deg, g.degree(v));
    CHECK(max_deg <= 3);
  }
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = tc::connected_graphs(5);
  const auto b = tc::connected_graphs(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("enumeration guards its feasible range") {
  CHECK_THROWS_AS(tc::connected_graphs(12), std::invalid_argument);
  CHECK(tc::connected_graphs(0).empty());
}
