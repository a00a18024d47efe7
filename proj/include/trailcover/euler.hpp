#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"

namespace trailcover {

namespace detail {

// Degree parity and connectivity of h restricted to its own edges.
inline std::vector<int> odd_degree_vertices_of(const Subgraph& h) {
  std::vector<int> odd;
  for (int v : h.vertices())
    if (h.degree(v) % 2 != 0) odd.push_back(v);
  return odd;
}

}  // namespace detail

// Builds an Eulerian trail of h using every h-edge exactly once.
// Preconditions: h is connected; in closed mode every h-degree is even; in
// open mode exactly two vertices have odd h-degree. Violations throw.
// Deterministic: incidence lists are consumed in ascending edge id order and
// the start vertex is the smallest eligible one, so equal inputs always give
// byte-identical trails.
inline Trail euler_trail(const Subgraph& h, Mode mode) {
  const Graph& g = h.host();
  if (h.vertices().empty()) throw std::invalid_argument("empty subgraph");
  if (!is_connected(h)) throw std::invalid_argument("subgraph not connected");

  const auto odd = detail::odd_degree_vertices_of(h);
  if (mode == Mode::closed && !odd.empty())
    throw std::invalid_argument("closed trail needs all degrees even");
  if (mode == Mode::open && odd.size() != 2)
    throw std::invalid_argument("open trail needs exactly two odd degrees");

  int start = -1;
  if (mode == Mode::open) {
    start = odd[0];
  } else {
    for (int v : h.vertices())
      if (h.degree(v) > 0) { start = v; break; }
    if (start == -1) start = h.vertices()[0];  // single vertex, no edges
  }

  // Per-vertex incidence restricted to h-edges, ascending by edge id since
  // Graph::incident preserves insertion order.
  std::vector<std::vector<Graph::Incidence>> inc(g.vertex_count());
  for (int v : h.vertices())
    for (const auto& step : g.incident(v))
      if (h.has_edge(step.edge)) inc[v].push_back(step);

  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<char> used(g.edge_count(), 0);

  // Iterative Hierholzer: walk greedily, backtrack when stuck, splice by
  // emitting edges in post-order and reversing.
  std::vector<std::pair<int, int>> stack;  // (vertex, edge taken to reach it)
  std::vector<int> out;
  stack.emplace_back(start, -1);
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    bool advanced = false;
    while (cursor[v] < inc[v].size()) {
      const auto& step = inc[v][cursor[v]++];
      if (used[step.edge]) continue;
      used[step.edge] = 1;
      stack.emplace_back(step.other, step.edge);
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (via >= 0) out.push_back(via);
    }
  }
  std::reverse(out.begin(), out.end());
  if (out.size() != h.edge_ids().size())
    throw std::logic_error("euler trail did not cover all edges");

  Trail t;
  t.host = &g;
  t.start = start;
  t.steps = std::move(out);
  return t;
}

}  // namespace trailcover
