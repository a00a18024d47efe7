#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"

namespace trailcover {

// Uniform draw from [0, bound) with rejection above the largest multiple of
// bound, so no value is favored.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline Graph random_multigraph(int n, int m, std::uint64_t seed,
                               bool allow_loops = false) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (m < 0) throw std::invalid_argument("negative edge count");
  if (n == 1 && m > 0 && !allow_loops)
    throw std::invalid_argument("cannot avoid loops on one vertex");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    for (;;) {
      const int u = static_cast<int>(rng_below(rng, n));
      const int v = static_cast<int>(rng_below(rng, n));
      if (!allow_loops && u == v) continue;
      g.add_edge(u, v);
      break;
    }
  }
  return g;
}

// Random simple graph with max degree 3. Feasible m is capped both by the
// degree sum and by simplicity; random placement can wedge near the cap, so
// unfinished attempts restart with fresh draws from the same stream.
inline Graph random_subcubic(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  const long long cap =
      std::min<long long>(3LL * n / 2, 1LL * n * (n - 1) / 2);
  if (m < 0 || m > cap)
    throw std::invalid_argument("infeasible parameters: need 0 <= m <= " +
                                std::to_string(cap));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    std::unordered_set<long long> present;
    long long tries = 0;
    const long long max_tries = 200LL * m + 200;
    while (static_cast<int>(edges.size()) < m && tries < max_tries) {
      ++tries;
      int u = static_cast<int>(rng_below(rng, n));
      int v = static_cast<int>(rng_below(rng, n));
      if (u == v || deg[u] >= 3 || deg[v] >= 3) continue;
      if (u > v) std::swap(u, v);
      if (!present.insert(1LL * u * n + v).second) continue;
      ++deg[u];
      ++deg[v];
      edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) == m) {
      Graph g(n);
      for (const auto& [u, v] : edges) g.add_edge(u, v);
      return g;
    }
  }
  throw std::runtime_error("could not place all edges");
}

// A connected multigraph plus a connected random subgraph of it.
struct Instance {
  Graph graph;
  std::vector<int> h_vertices;
  std::vector<int> h_edges;
};

// G = random spanning tree plus m-(n-1) arbitrary extra edges (loops and
// parallels allowed). H grows from a random vertex one incident edge at a
// time, so it is connected by construction; it may be a single vertex.
inline Instance random_instance(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (m < n - 1) throw std::invalid_argument("need at least n-1 edges");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v)
    g.add_edge(static_cast<int>(rng_below(rng, v)), v);
  for (int i = n - 1; i < m; ++i)
    g.add_edge(static_cast<int>(rng_below(rng, n)),
               static_cast<int>(rng_below(rng, n)));

  const int want = static_cast<int>(rng_below(rng, std::uint64_t(m) + 1));
  std::vector<char> has_vertex(n, 0), queued(m, 0);
  std::vector<int> cand, hv, he;
  auto add_vertex = [&](int v) {
    if (has_vertex[v]) return;
    has_vertex[v] = 1;
    hv.push_back(v);
    for (const auto& inc : g.incident(v)) {
      if (queued[inc.edge]) continue;
      queued[inc.edge] = 1;
      cand.push_back(inc.edge);
    }
  };
  add_vertex(static_cast<int>(rng_below(rng, n)));
  while (static_cast<int>(he.size()) < want && !cand.empty()) {
    const std::size_t i =
        static_cast<std::size_t>(rng_below(rng, cand.size()));
    const int e = cand[i];
    cand[i] = cand.back();
    cand.pop_back();
    he.push_back(e);
    const auto [u, v] = g.endpoints(e);
    add_vertex(u);
    add_vertex(v);
  }
  std::sort(hv.begin(), hv.end());
  std::sort(he.begin(), he.end());
  return {std::move(g), std::move(hv), std::move(he)};
}

inline Subgraph instance_subgraph(const Instance& inst) {
  return subgraph_from(inst.graph, inst.h_vertices, inst.h_edges);
}

}  // namespace trailcover
