#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trailcover/graph.hpp"
#include "trailcover/oracle.hpp"
#include "trailcover/subgraph.hpp"

namespace trailcover {

// One Hamiltonian-path question produced by deleting a single edge: does the
// remaining graph have a Hamiltonian path between that edge's endpoints?
struct HPQuery {
  Graph graph;  // the input minus one edge, ids re-densified
  int edge;     // id of the deleted edge in the original graph
  int s, t;     // its endpoints
};

// A Hamiltonian cycle exists iff some deleted cycle edge leaves a
// Hamiltonian path between its endpoints, so the disjunction of the queries
// answers the cycle question (for n >= 3). Loop edges yield s == t queries,
// which evaluators must treat as no.
inline std::vector<HPQuery> hc_to_hp_queries(const Graph& g) {
  std::vector<HPQuery> out;
  out.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    Graph q(g.vertex_count());
    for (int f = 0; f < g.edge_count(); ++f) {
      if (f == e) continue;
      const auto [u, v] = g.endpoints(f);
      q.add_edge(u, v);
    }
    const auto [u, v] = g.endpoints(e);
    out.push_back({std::move(q), e, u, v});
  }
  return out;
}

// All unordered vertex pairs in ascending order; the disjunction of the
// fixed-endpoint answers over them decides Hamiltonian path.
inline std::vector<std::pair<int, int>> hp_query_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < g.vertex_count(); ++s)
    for (int t = s + 1; t < g.vertex_count(); ++t) out.emplace_back(s, t);
  return out;
}

struct ReductionOutcome {
  OracleStatus status;
  int witness_edge = -1;      // query that answered yes, -1 otherwise
  std::vector<int> vertices;  // its Hamiltonian path when yes
};

// Evaluates the edge-deletion queries in order and ORs the answers. A yes is
// final even if an earlier query ran out of budget; with no yes, any
// exhausted query makes the disjunction unknown.
inline ReductionOutcome hc_via_edge_deletion(const Graph& g,
                                             const OracleBudget& budget = {}) {
  bool exceeded = false;
  for (const auto& q : hc_to_hp_queries(g)) {
    if (q.s == q.t) continue;
    const auto r = ham_path_bruteforce(q.graph, q.s, q.t, budget);
    if (r.status == OracleStatus::yes) return {r.status, q.edge, r.vertices};
    if (r.status == OracleStatus::budget_exceeded) exceeded = true;
  }
  return {exceeded ? OracleStatus::budget_exceeded : OracleStatus::no, -1, {}};
}

// ORs the fixed-endpoint answers over all pairs.
inline HamResult hp_via_all_pairs(const Graph& g,
                                  const OracleBudget& budget = {}) {
  if (g.vertex_count() == 0) return {OracleStatus::no, {}};
  if (g.vertex_count() == 1) return {OracleStatus::yes, {0}};
  bool exceeded = false;
  for (const auto& [s, t] : hp_query_pairs(g)) {
    const auto r = ham_path_bruteforce(g, s, t, budget);
    if (r.status == OracleStatus::yes) return r;
    if (r.status == OracleStatus::budget_exceeded) exceeded = true;
  }
  return {exceeded ? OracleStatus::budget_exceeded : OracleStatus::no, {}};
}

inline bool is_subcubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3) return false;
  return true;
}

// FNV-1a over the labeled edge list. Identifies a graph as given, not up to
// isomorphism.
inline std::uint64_t graph_hash(const Graph& g) {
  std::string text =
      std::to_string(g.vertex_count()) + ":" + std::to_string(g.edge_count()) + ":";
  for (const auto& [u, v] : g.edges())
    text += std::to_string(u) + "," + std::to_string(v) + ";";
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Face-off between two exhaustive predicates on a subcubic graph: does a
// Hamiltonian path exist, and does one open trail through every vertex
// exist? The claim that these agree is treated as falsifiable and checked,
// never assumed.
struct EquivalenceReport {
  std::uint64_t hash = 0;
  HamResult hp;
  OracleResult spanning_trail;
};

inline bool report_decided(const EquivalenceReport& r) {
  return r.hp.status != OracleStatus::budget_exceeded &&
         r.spanning_trail.status != OracleStatus::budget_exceeded;
}

inline bool report_consistent(const EquivalenceReport& r) {
  return (r.hp.status == OracleStatus::yes) ==
         (r.spanning_trail.status == OracleStatus::yes);
}

// Embeds the spanning-Eulerian-subgraph question: a closed trail of g covers
// this H exactly when g has a spanning closed trail. The subgraph references
// the passed host, which must outlive it.
inline std::pair<const Graph&, Subgraph> edgeless_spanning_instance(
    const Graph& g) {
  return {g, edgeless_spanning_subgraph(g)};
}

inline EquivalenceReport check_hp_spanning_trail_equivalence(
    const Graph& g, const OracleBudget& budget = {}) {
  if (!is_subcubic(g)) throw std::invalid_argument("graph is not subcubic");
  EquivalenceReport r;
  r.hash = graph_hash(g);
  r.hp = hp_via_all_pairs(g, budget);
  r.spanning_trail = spanning_open_trail_bruteforce(g, budget);
  return r;
}

}  // namespace trailcover
