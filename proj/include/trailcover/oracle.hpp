#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trailcover/euler.hpp"
#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"

namespace trailcover {

struct OracleBudget {
  int max_vertices = 12;     // caps the Hamiltonian searches
  int max_free_edges = 24;   // caps the subset enumeration
  long long time_limit_ms = 10000;
};

enum class OracleStatus { yes, no, budget_exceeded };

struct OracleResult {
  OracleStatus status;
  std::optional<Trail> trail;
};

struct HamResult {
  OracleStatus status;
  std::vector<int> vertices;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(long long ms)
      : end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)) {}
  bool expired() const { return std::chrono::steady_clock::now() >= end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

inline int dsu_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace detail

// Decides by exhaustion whether some spare edge set D makes H plus D
// coverable by one trail of the requested kind, independent of the
// parity-partition pipeline. Subsets are tried in ascending bitmask order
// over the ascending list of spare edges and the first hit wins, so results
// are reproducible. A candidate D is accepted when H plus D, on the vertex
// set V(H) union endpoints(D), is connected and has zero (closed) or exactly
// two (open) odd degrees.
inline OracleResult oracle_covering_trail(const Subgraph& h, Mode mode,
                                          const OracleBudget& budget = {}) {
  const Graph& g = h.host();
  detail::Deadline deadline(budget.time_limit_ms);

  if (h.vertices().empty()) {
    // Nothing to cover: any trail works. Closed gets the empty walk at
    // vertex 0; open needs some non-loop edge since its ends must differ.
    if (mode == Mode::closed) {
      if (g.vertex_count() == 0) return {OracleStatus::no, std::nullopt};
      Trail t;
      t.host = &g;
      t.start = 0;
      return {OracleStatus::yes, std::move(t)};
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) continue;
      Trail t;
      t.host = &g;
      t.start = g.endpoints(e).first;
      t.steps = {e};
      return {OracleStatus::yes, std::move(t)};
    }
    return {OracleStatus::no, std::nullopt};
  }

  std::vector<int> free;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!h.has_edge(e)) free.push_back(e);
  const int f = static_cast<int>(free.size());
  if (f > budget.max_free_edges)
    return {OracleStatus::budget_exceeded, std::nullopt};

  // Compact universe: V(H) plus every spare endpoint. Vertices outside it
  // can never appear in H plus D.
  std::vector<int> universe(h.vertices().begin(), h.vertices().end());
  for (int e : free) {
    const auto [u, v] = g.endpoints(e);
    universe.push_back(u);
    universe.push_back(v);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());
  const int nu = static_cast<int>(universe.size());
  std::vector<int> cid(g.vertex_count(), -1);
  for (int i = 0; i < nu; ++i) cid[universe[i]] = i;

  std::vector<int> fu(f), fv(f);
  for (int i = 0; i < f; ++i) {
    const auto [u, v] = g.endpoints(free[i]);
    fu[i] = cid[u];
    fv[i] = cid[v];
  }

  std::vector<char> parity(nu, 0);
  int odd = 0;
  for (int i = 0; i < nu; ++i) {
    parity[i] = static_cast<char>(h.degree(universe[i]) % 2);
    odd += parity[i];
  }
  const int want_odd = mode == Mode::closed ? 0 : 2;

  // H-edges never change between candidates, so their unions are baked into
  // a flattened base forest copied per parity-passing candidate.
  std::vector<int> base(nu);
  std::iota(base.begin(), base.end(), 0);
  for (int e : h.edge_ids()) {
    const auto [u, v] = g.endpoints(e);
    const int ru = detail::dsu_find(base, cid[u]);
    const int rv = detail::dsu_find(base, cid[v]);
    if (ru != rv) base[ru] = rv;
  }
  for (int i = 0; i < nu; ++i) base[i] = detail::dsu_find(base, i);

  std::vector<int> parent(nu);
  const std::uint64_t total = std::uint64_t{1} << f;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & 4095u) == 0 && deadline.expired())
      return {OracleStatus::budget_exceeded, std::nullopt};

    for (std::uint64_t bits = mask; bits;) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      odd += (parity[fu[i]] ^= 1) ? 1 : -1;
      odd += (parity[fv[i]] ^= 1) ? 1 : -1;
    }
    bool found = false;
    if (odd == want_odd) {
      parent = base;
      for (std::uint64_t bits = mask; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        const int ru = detail::dsu_find(parent, fu[i]);
        const int rv = detail::dsu_find(parent, fv[i]);
        if (ru != rv) parent[ru] = rv;
      }
      const int root = detail::dsu_find(parent, cid[h.vertices()[0]]);
      found = true;
      for (int v : h.vertices())
        if (detail::dsu_find(parent, cid[v]) != root) {
          found = false;
          break;
        }
      if (found)
        for (std::uint64_t bits = mask; bits;) {
          const int i = std::countr_zero(bits);
          bits &= bits - 1;
          if (detail::dsu_find(parent, fu[i]) != root ||
              detail::dsu_find(parent, fv[i]) != root) {
            found = false;
            break;
          }
        }
    }
    for (std::uint64_t bits = mask; bits;) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      odd += (parity[fu[i]] ^= 1) ? 1 : -1;
      odd += (parity[fv[i]] ^= 1) ? 1 : -1;
    }
    if (!found) continue;

    std::vector<int> verts(h.vertices().begin(), h.vertices().end());
    std::vector<int> edges(h.edge_ids().begin(), h.edge_ids().end());
    for (std::uint64_t bits = mask; bits;) {
      const int i = std::countr_zero(bits);
      bits &= bits - 1;
      edges.push_back(free[i]);
      const auto [u, v] = g.endpoints(free[i]);
      verts.push_back(u);
      verts.push_back(v);
    }
    auto hp = subgraph_from(g, std::move(verts), std::move(edges));
    return {OracleStatus::yes, euler_trail(hp, mode)};
  }
  return {OracleStatus::no, std::nullopt};
}

// Exhaustive Hamiltonian cycle search. Neighbors are explored in ascending
// order from vertex 0, so the first cycle found is reproducible. Loops never
// help for n >= 2; parallel edges only matter for n == 2.
inline HamResult ham_cycle_bruteforce(const Graph& g,
                                      const OracleBudget& budget = {}) {
  const int n = g.vertex_count();
  if (n > budget.max_vertices) return {OracleStatus::budget_exceeded, {}};
  if (n == 0) return {OracleStatus::no, {}};
  if (n == 1) {
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.is_loop(e)) return {OracleStatus::yes, {0}};
    return {OracleStatus::no, {}};
  }
  if (n == 2) {
    int links = 0;
    for (int e = 0; e < g.edge_count(); ++e)
      if (!g.is_loop(e)) ++links;
    if (links >= 2) return {OracleStatus::yes, {0, 1}};
    return {OracleStatus::no, {}};
  }

  std::vector<std::uint64_t> adj(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const auto [u, v] = g.endpoints(e);
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }

  detail::Deadline deadline(budget.time_limit_ms);
  std::vector<int> path{0};
  std::uint64_t seen = 1;
  long long steps = 0;
  bool out_of_time = false;
  auto dfs = [&](auto&& self, int v) -> bool {
    if ((++steps & 4095) == 0 && deadline.expired()) {
      out_of_time = true;
      return false;
    }
    if (static_cast<int>(path.size()) == n) return adj[v] & 1;
    for (std::uint64_t cand = adj[v] & ~seen; cand;) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(w);
      seen |= std::uint64_t{1} << w;
      if (self(self, w)) return true;
      if (out_of_time) return false;
      path.pop_back();
      seen &= ~(std::uint64_t{1} << w);
    }
    return false;
  };
  if (dfs(dfs, 0)) return {OracleStatus::yes, path};
  if (out_of_time) return {OracleStatus::budget_exceeded, {}};
  return {OracleStatus::no, {}};
}

// Exhaustive Hamiltonian path search with fixed distinct endpoints.
// The target is only allowed as the final vertex.
inline HamResult ham_path_bruteforce(const Graph& g, int s, int t,
                                     const OracleBudget& budget = {}) {
  g.require_vertex(s);
  g.require_vertex(t);
  if (s == t) throw std::invalid_argument("endpoints must differ");
  const int n = g.vertex_count();
  if (n > budget.max_vertices) return {OracleStatus::budget_exceeded, {}};

  std::vector<std::uint64_t> adj(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const auto [u, v] = g.endpoints(e);
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }

  detail::Deadline deadline(budget.time_limit_ms);
  std::vector<int> path{s};
  std::uint64_t seen = std::uint64_t{1} << s;
  long long steps = 0;
  bool out_of_time = false;
  auto dfs = [&](auto&& self, int v) -> bool {
    if ((++steps & 4095) == 0 && deadline.expired()) {
      out_of_time = true;
      return false;
    }
    if (static_cast<int>(path.size()) == n) return v == t;
    std::uint64_t cand = adj[v] & ~seen;
    if (static_cast<int>(path.size()) < n - 1)
      cand &= ~(std::uint64_t{1} << t);
    for (; cand;) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(w);
      seen |= std::uint64_t{1} << w;
      if (self(self, w)) return true;
      if (out_of_time) return false;
      path.pop_back();
      seen &= ~(std::uint64_t{1} << w);
    }
    return false;
  };
  if (dfs(dfs, s)) return {OracleStatus::yes, path};
  if (out_of_time) return {OracleStatus::budget_exceeded, {}};
  return {OracleStatus::no, {}};
}

// Hamiltonian path with free endpoints, queried over ascending vertex pairs.
inline HamResult ham_path_bruteforce(const Graph& g,
                                     const OracleBudget& budget = {}) {
  const int n = g.vertex_count();
  if (n == 0) return {OracleStatus::no, {}};
  if (n == 1) return {OracleStatus::yes, {0}};
  if (n > budget.max_vertices) return {OracleStatus::budget_exceeded, {}};
  bool out_of_time = false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const auto r = ham_path_bruteforce(g, s, t, budget);
      if (r.status == OracleStatus::yes) return r;
      if (r.status == OracleStatus::budget_exceeded) out_of_time = true;
    }
  return {out_of_time ? OracleStatus::budget_exceeded : OracleStatus::no, {}};
}

// Does G admit one open trail through every vertex? This is the edgeless
// spanning special case of the oracle.
inline OracleResult spanning_open_trail_bruteforce(
    const Graph& g, const OracleBudget& budget = {}) {
  return oracle_covering_trail(edgeless_spanning_subgraph(g), Mode::open,
                               budget);
}

}  // namespace trailcover
