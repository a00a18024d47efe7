#pragma once

#include <optional>
#include <vector>

#include "trailcover/graph.hpp"

namespace trailcover {

// Shape of a trail: closed ends where it started, open ends elsewhere.
enum class Mode { closed, open };

// An edge-distinct walk in a host Graph, stored as a start vertex plus the
// edge-id sequence of its steps. A Trail value is plain data; use
// verify_trail to check validity against a graph and subgraph.
struct Trail {
  const Graph* host = nullptr;
  int start = 0;
  std::vector<int> steps;

  // Vertex sequence v0..vk of the walk, or nullopt if the steps do not form
  // a walk from start (bad ids included).
  std::optional<std::vector<int>> walk_vertices() const {
    if (host == nullptr) return std::nullopt;
    if (start < 0 || start >= host->vertex_count()) return std::nullopt;
    std::vector<int> seq{start};
    int at = start;
    for (int e : steps) {
      if (e < 0 || e >= host->edge_count()) return std::nullopt;
      const auto [u, v] = host->endpoints(e);
      if (u == v) {
        if (at != u) return std::nullopt;
      } else if (at == u) {
        at = v;
      } else if (at == v) {
        at = u;
      } else {
        return std::nullopt;
      }
      seq.push_back(at);
    }
    return seq;
  }

  std::optional<int> end_vertex() const {
    auto seq = walk_vertices();
    if (!seq) return std::nullopt;
    return seq->back();
  }

  friend bool operator==(const Trail& a, const Trail& b) {
    return a.host == b.host && a.start == b.start && a.steps == b.steps;
  }
};

}  // namespace trailcover
