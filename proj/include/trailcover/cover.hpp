#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trailcover/euler.hpp"
#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"

namespace trailcover {

// Odd-degree vertices of H grouped by the component of G - E(H) they sit in.
// Two grouped vertices can be joined by a path that avoids every H-edge, so
// parity can be fixed inside a group without touching the others.
struct OddPartition {
  std::vector<std::vector<int>> groups;
};

// Which odd vertices get joined by spare paths and which stay odd on purpose.
struct MatchingPlan {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> leftovers;
};

// Spare edges whose addition turns H into a trail-coverable supergraph.
struct Completion {
  std::vector<int> edge_ids;         // ascending, disjoint from E(H)
  std::vector<int> hprime_vertices;  // V(H) plus endpoints of edge_ids
};

inline std::vector<int> odd_vertices(const Subgraph& h) {
  std::vector<int> odd;
  for (int v : h.vertices())
    if (h.degree(v) % 2 != 0) odd.push_back(v);
  return odd;
}

inline std::vector<int> free_edges(const Subgraph& h) {
  std::vector<int> out;
  for (int e = 0; e < h.host().edge_count(); ++e)
    if (!h.has_edge(e)) out.push_back(e);
  return out;
}

namespace detail {

// Smallest spare non-loop edge touching V(H); -1 if none. Adding it is the
// only way to force two odd degrees when H has none: spare loops keep parity
// and spare edges away from V(H) cannot stay connected to H.
inline int open_patch_edge(const Subgraph& h) {
  const Graph& g = h.host();
  std::vector<char> in_h(g.vertex_count(), 0);
  for (int v : h.vertices()) in_h[v] = 1;
  std::vector<char> skip(g.edge_count(), 0);
  for (int e : h.edge_ids()) skip[e] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (skip[e] || g.is_loop(e)) continue;
    const auto [u, v] = g.endpoints(e);
    if (in_h[u] || in_h[v]) return e;
  }
  return -1;
}

}  // namespace detail

inline OddPartition odd_components(const Subgraph& h) {
  const Graph& g = h.host();
  std::vector<char> skip(g.edge_count(), 0);
  for (int e : h.edge_ids()) skip[e] = 1;
  const auto label = components_masked(g, skip);
  OddPartition p;
  std::vector<int> group_of(g.vertex_count(), -1);
  for (int v : odd_vertices(h)) {
    int& slot = group_of[label[v]];
    if (slot == -1) {
      slot = static_cast<int>(p.groups.size());
      p.groups.emplace_back();
    }
    p.groups[slot].push_back(v);
  }
  return p;
}

inline bool closed_feasible(const OddPartition& p) {
  for (const auto& grp : p.groups)
    if (grp.size() % 2 != 0) return false;
  return true;
}

// Total odd count is even, so the number of odd-size groups is even too;
// two endpoints can repair at most two groups.
inline bool open_feasible(const Subgraph& h, const OddPartition& p) {
  if (p.groups.empty()) return detail::open_patch_edge(h) >= 0;
  int odd_groups = 0;
  for (const auto& grp : p.groups) odd_groups += grp.size() % 2;
  return odd_groups <= 2;
}

// Pairs odd vertices consecutively inside each group. Open mode keeps two
// vertices unpaired: the last of each odd-size group when two exist, else
// the two largest of the first group (the one with the smallest minimum).
// The completion depends only on which vertices stay unpaired, not on the
// pairing itself. Callers must have checked feasibility; when S is empty in
// open mode the plan is empty and the patch edge is picked later.
inline MatchingPlan pair_odd_vertices(const OddPartition& p, Mode mode) {
  MatchingPlan plan;
  if (mode == Mode::closed) {
    if (!closed_feasible(p))
      throw std::domain_error("closed completion infeasible");
    for (const auto& grp : p.groups)
      for (std::size_t i = 0; i + 1 < grp.size(); i += 2)
        plan.pairs.emplace_back(grp[i], grp[i + 1]);
    return plan;
  }
  if (p.groups.empty()) return plan;
  std::vector<std::size_t> odd_idx;
  for (std::size_t i = 0; i < p.groups.size(); ++i)
    if (p.groups[i].size() % 2 != 0) odd_idx.push_back(i);
  if (odd_idx.size() > 2) throw std::domain_error("open completion infeasible");
  if (odd_idx.empty()) {
    const auto& g0 = p.groups[0];
    plan.leftovers = {g0[g0.size() - 2], g0[g0.size() - 1]};
  } else {
    plan.leftovers = {p.groups[odd_idx[0]].back(), p.groups[odd_idx[1]].back()};
    if (plan.leftovers[0] > plan.leftovers[1])
      std::swap(plan.leftovers[0], plan.leftovers[1]);
  }
  for (const auto& grp : p.groups) {
    std::vector<int> rest;
    for (int v : grp)
      if (v != plan.leftovers[0] && v != plan.leftovers[1]) rest.push_back(v);
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2)
      plan.pairs.emplace_back(rest[i], rest[i + 1]);
  }
  return plan;
}

// Picks spare edges whose addition leaves every vertex even (closed) or
// exactly the plan's leftovers odd (open). Runs in O(n + m): one BFS forest
// over the spare edges, then every tree edge whose child subtree holds an
// odd number of paired vertices — the symmetric difference of the tree
// paths joining the pairs. Throws when no completion exists.
inline Completion even_completion(const Subgraph& h, const MatchingPlan& plan,
                                  Mode mode) {
  const Graph& g = h.host();

  Completion c;
  if (mode == Mode::open && plan.pairs.empty() && plan.leftovers.empty()) {
    const int patch = detail::open_patch_edge(h);
    if (patch < 0) throw std::domain_error("no augmenting edge");
    c.edge_ids.push_back(patch);
  } else if (!plan.pairs.empty()) {
    std::vector<char> marked(g.vertex_count(), 0);
    for (const auto& [a, b] : plan.pairs) {
      marked[a] = 1;
      marked[b] = 1;
    }
    std::vector<char> skip(g.edge_count(), 0);
    for (int e : h.edge_ids()) skip[e] = 1;

    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> order;
    order.reserve(g.vertex_count());
    for (int root = 0; root < g.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      const std::size_t head = order.size();
      order.push_back(root);
      for (std::size_t qi = head; qi < order.size(); ++qi) {
        const int v = order[qi];
        for (const auto& step : g.incident(v)) {
          if (skip[step.edge] || seen[step.other]) continue;
          seen[step.other] = 1;
          parent[step.other] = v;
          parent_edge[step.other] = step.edge;
          order.push_back(step.other);
        }
      }
    }

    std::vector<char> parity(marked);
    std::vector<char> take(g.edge_count(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      if (!parity[v]) continue;
      if (parent[v] < 0) throw std::logic_error("completion parity mismatch");
      take[parent_edge[v]] = 1;
      parity[parent[v]] ^= 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
      if (take[e]) c.edge_ids.push_back(e);
  }

  std::vector<int> verts(h.vertices().begin(), h.vertices().end());
  for (int e : c.edge_ids) {
    const auto [u, v] = g.endpoints(e);
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  c.hprime_vertices = std::move(verts);
  return c;
}

inline Completion even_completion(const Subgraph& h, Mode mode) {
  return even_completion(h, pair_odd_vertices(odd_components(h), mode), mode);
}

inline Subgraph completed_subgraph(const Subgraph& h, const Completion& c) {
  std::vector<int> edges(h.edge_ids().begin(), h.edge_ids().end());
  edges.insert(edges.end(), c.edge_ids.begin(), c.edge_ids.end());
  return subgraph_from(h.host(), c.hprime_vertices, std::move(edges));
}

// Full pipeline for connected H: partition the odd vertices, test parity
// feasibility, add the completion, walk the result. Returns nothing when no
// covering trail of the requested kind exists; throws on disconnected H.
inline std::optional<Trail> covering_trail(const Subgraph& h, Mode mode) {
  if (!is_connected(h)) throw std::invalid_argument("subgraph not connected");
  const auto part = odd_components(h);
  const bool feasible = mode == Mode::closed ? closed_feasible(part)
                                             : open_feasible(h, part);
  if (!feasible) return std::nullopt;
  return euler_trail(completed_subgraph(h, even_completion(h, mode)), mode);
}

}  // namespace trailcover
