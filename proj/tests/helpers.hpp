#pragma once

#include <utility>
#include <vector>

#include "trailcover/trailcover.hpp"

namespace th {

inline trailcover::Graph from_edges(int n,
                                    const std::vector<std::pair<int, int>>& es) {
  trailcover::Graph g(n);
  for (const auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

inline trailcover::Graph path_graph(int n) {
  trailcover::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline trailcover::Graph cycle_graph(int n) {
  trailcover::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline trailcover::Graph complete_graph(int n) {
  trailcover::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Star with center 0 and the given number of leaves.
inline trailcover::Graph star_graph(int leaves) {
  trailcover::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Two triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline trailcover::Graph bowtie_graph() {
  return from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

// Complete bipartite with parts {0,1} and {2,3,4}.
inline trailcover::Graph k23_graph() {
  return from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Three internally disjoint 0-1 paths of length 3 each.
inline trailcover::Graph theta333_graph() {
  return from_edges(8, {{0, 2}, {2, 3}, {3, 1},
                        {0, 4}, {4, 5}, {5, 1},
                        {0, 6}, {6, 7}, {7, 1}});
}

inline trailcover::Graph petersen_graph() {
  trailcover::Graph g(10);
  for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
  for (int v = 0; v < 5; ++v) g.add_edge(v, v + 5);
  for (int v = 0; v < 5; ++v) g.add_edge(5 + v, 5 + (v + 2) % 5);
  return g;
}

// Subgraph spanned by the given edge ids (vertex set = their endpoints).
inline trailcover::Subgraph edge_sub(const trailcover::Graph& g,
                                     const std::vector<int>& edge_ids) {
  std::vector<int> vs;
  for (int e : edge_ids) {
    const auto [u, v] = g.endpoints(e);
    vs.push_back(u);
    vs.push_back(v);
  }
  return trailcover::subgraph_from(g, vs, edge_ids);
}

// Subgraph holding every vertex and every edge of g.
inline trailcover::Subgraph whole_sub(const trailcover::Graph& g) {
  std::vector<int> vs(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vs[static_cast<std::size_t>(v)] = v;
  std::vector<int> es(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) es[static_cast<std::size_t>(e)] = e;
  return trailcover::subgraph_from(g, vs, es);
}

}  // namespace th
