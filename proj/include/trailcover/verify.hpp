#pragma once

#include <string>
#include <vector>

#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"

namespace trailcover {

struct VerifyResult {
  bool ok;
  std::string diagnostic;
};

// Independent checker: accepts untrusted trails and reports the first failed
// clause. A trail is valid for (h, mode) when it is a walk in h's host using
// no edge twice, has the right shape (the empty walk counts as closed), uses
// every edge of h, and visits every vertex of h.
inline VerifyResult verify_trail(const Subgraph& h, const Trail& t, Mode mode) {
  const Graph& g = h.host();
  if (t.start < 0 || t.start >= g.vertex_count())
    return {false, "start out of range"};
  for (int e : t.steps)
    if (e < 0 || e >= g.edge_count()) return {false, "edge id out of range"};

  std::vector<int> visited{t.start};
  int at = t.start;
  for (int e : t.steps) {
    const auto [u, v] = g.endpoints(e);
    if (u == v) {
      if (at != u) return {false, "not a walk"};
    } else if (at == u) {
      at = v;
    } else if (at == v) {
      at = u;
    } else {
      return {false, "not a walk"};
    }
    visited.push_back(at);
  }

  std::vector<char> used(g.edge_count(), 0);
  for (int e : t.steps) {
    if (used[e]) return {false, "edge repeated"};
    used[e] = 1;
  }

  if (mode == Mode::closed && at != t.start) return {false, "not closed"};
  if (mode == Mode::open && at == t.start) return {false, "not open"};

  for (int e : h.edge_ids())
    if (!used[e]) return {false, "uncovered H edge"};

  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : visited) seen[v] = 1;
  for (int v : h.vertices())
    if (!seen[v]) return {false, "unvisited H vertex"};

  return {true, "ok"};
}

}  // namespace trailcover
