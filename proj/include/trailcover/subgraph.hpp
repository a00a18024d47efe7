#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "trailcover/graph.hpp"

namespace trailcover {

// A subgraph of a host Graph: a vertex-id set plus an edge-id set, with the
// closure invariant that every endpoint of every listed edge is listed too.
// Vertices with no incident listed edge are legal (isolated vertices).
// The host must outlive the Subgraph.
class Subgraph {
 public:
  Subgraph() = default;

  const Graph& host() const { return *host_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }

  bool has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(int e) const {
    return std::binary_search(edge_ids_.begin(), edge_ids_.end(), e);
  }

  // Degree of v counted over the subgraph's edges only; loops count 2.
  int degree(int v) const {
    host_->require_vertex(v);
    int d = 0;
    for (const auto& inc : host_->incident(v))
      if (has_edge(inc.edge)) ++d;
    return d;
  }

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.host_ == b.host_ && a.vertices_ == b.vertices_ &&
           a.edge_ids_ == b.edge_ids_;
  }

 private:
  friend Subgraph subgraph_from(const Graph&, std::vector<int>,
                                std::vector<int>);
  const Graph* host_ = nullptr;
  std::vector<int> vertices_;   // sorted, unique
  std::vector<int> edge_ids_;   // sorted, unique
};

// Validates and builds a Subgraph. Throws std::out_of_range for bad ids and
// std::invalid_argument naming the offending edge on a closure violation.
inline Subgraph subgraph_from(const Graph& host, std::vector<int> vertices,
                              std::vector<int> edge_ids) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()),
                 edge_ids.end());

  for (int v : vertices) host.require_vertex(v);
  std::vector<char> in_vertices(static_cast<std::size_t>(host.vertex_count()), 0);
  for (int v : vertices) in_vertices[static_cast<std::size_t>(v)] = 1;
  for (int e : edge_ids) {
    host.require_edge(e);
    const auto [u, v] = host.endpoints(e);
    if (!in_vertices[static_cast<std::size_t>(u)] ||
        !in_vertices[static_cast<std::size_t>(v)])
      throw std::invalid_argument(
          "closure violation: edge " + std::to_string(e) + " = {" +
          std::to_string(u) + "," + std::to_string(v) +
          "} has an endpoint outside the vertex set");
  }

  Subgraph s;
  s.host_ = &host;
  s.vertices_ = std::move(vertices);
  s.edge_ids_ = std::move(edge_ids);
  return s;
}

// True iff (vertices, edge_ids) forms one connected graph. The empty
// subgraph counts as disconnected; a single vertex counts as connected.
inline bool is_connected(const Subgraph& h) {
  const auto& vs = h.vertices();
  if (vs.empty()) return false;
  if (vs.size() == 1) return true;

  const Graph& g = h.host();
  std::vector<char> in_h(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : h.edge_ids()) in_h[static_cast<std::size_t>(e)] = 1;

  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> queue{vs.front()};
  seen[static_cast<std::size_t>(vs.front())] = 1;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& inc : g.incident(queue[head])) {
      if (!in_h[static_cast<std::size_t>(inc.edge)]) continue;
      if (!seen[static_cast<std::size_t>(inc.other)]) {
        seen[static_cast<std::size_t>(inc.other)] = 1;
        ++reached;
        queue.push_back(inc.other);
      }
    }
  }
  return reached == vs.size();
}

// All vertices of g, no edges. Covering it asks for a trail through every
// vertex.
inline Subgraph edgeless_spanning_subgraph(const Graph& g) {
  std::vector<int> vs(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vs.begin(), vs.end(), 0);
  return subgraph_from(g, std::move(vs), {});
}

}  // namespace trailcover
