#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "trailcover/graph.hpp"

namespace trailcover {

namespace detail {

// Simple graphs on up to 11 vertices, adjacency as per-vertex bitmasks and
// identity as the upper-triangle edge bitmask packed into 64 bits.

inline int pair_pos(int n, int i, int j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

// Iterated neighborhood refinement. Vertices end up in the same class only
// if no sequence of (class, sorted neighbor classes) signatures separates
// them; class ids are isomorphism-invariant, so a canonical labeling only
// needs to permute within classes.
inline std::vector<int> refine_classes(int n,
                                       const std::vector<std::uint16_t>& adj) {
  std::vector<int> cls(n, 0);
  {
    std::vector<int> degs(n), uniq(n);
    for (int v = 0; v < n; ++v) degs[v] = std::popcount(adj[v]);
    uniq = degs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      cls[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(cls[v]);
      for (std::uint16_t b = adj[v]; b;) {
        sig[v].push_back(cls[std::countr_zero(b)]);
        b &= static_cast<std::uint16_t>(b - 1);
      }
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (next == cls) return cls;
    cls = std::move(next);
  }
}

inline std::uint64_t key_under(int n, const std::vector<std::uint16_t>& adj,
                               const std::vector<int>& label) {
  const int bits = n * (n - 1) / 2;
  std::uint64_t key = 0;
  for (int u = 0; u < n; ++u)
    for (std::uint16_t b = adj[u]; b;) {
      const int w = std::countr_zero(b);
      b &= static_cast<std::uint16_t>(b - 1);
      if (w <= u) continue;
      const int i = std::min(label[u], label[w]);
      const int j = std::max(label[u], label[w]);
      key |= std::uint64_t{1} << (bits - 1 - pair_pos(n, i, j));
    }
  return key;
}

// Minimum edge bitmask over all labelings that list refinement classes in
// class order. Isomorphic graphs share class structure, so they share keys.
inline std::uint64_t canonical_key(int n,
                                   const std::vector<std::uint16_t>& adj) {
  const auto cls = refine_classes(n, adj);
  const int k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<int>> blocks(k);
  for (int v = 0; v < n; ++v) blocks[cls[v]].push_back(v);
  std::vector<int> offset(k, 0);
  for (int c = 1; c < k; ++c)
    offset[c] = offset[c - 1] + static_cast<int>(blocks[c - 1].size());

  std::vector<int> label(n, -1);
  std::uint64_t best = ~std::uint64_t{0};
  auto place = [&](auto&& self, int c) -> void {
    if (c == k) {
      best = std::min(best, key_under(n, adj, label));
      return;
    }
    auto perm = blocks[c];
    do {
      for (std::size_t i = 0; i < perm.size(); ++i)
        label[perm[i]] = offset[c] + static_cast<int>(i);
      self(self, c + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  place(place, 0);
  return best;
}

inline std::vector<std::uint16_t> adj_from_key(int n, std::uint64_t key) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::uint16_t> adj(n, 0);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      if ((key >> (bits - 1 - p)) & 1) {
        adj[i] |= static_cast<std::uint16_t>(std::uint16_t{1} << j);
        adj[j] |= static_cast<std::uint16_t>(std::uint16_t{1} << i);
      }
  return adj;
}

}  // namespace detail

// One representative per isomorphism class of connected simple graphs on n
// vertices, optionally capped by max degree and edge count, in ascending
// canonical-key order. Grown by attaching a new vertex to every canonical
// (n-1)-graph in every way: any connected graph has a non-cut vertex, so
// removing it leaves a smaller connected graph the growth step recreates it
// from. Degree and edge caps are closed under vertex deletion, which keeps
// the capped enumerations complete too.
inline std::vector<Graph> connected_graphs(int n, int max_degree = -1,
                                           int max_edges = -1) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (n > 11) throw std::invalid_argument("enumeration capped at 11 vertices");
  if (n == 0) return {};

  std::vector<std::uint64_t> keys{0};  // the one-vertex graph
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (const std::uint64_t key : keys) {
      const auto base = detail::adj_from_key(k - 1, key);
      std::vector<int> deg(k - 1);
      int m = 0;
      for (int v = 0; v < k - 1; ++v) {
        deg[v] = std::popcount(base[v]);
        m += deg[v];
      }
      m /= 2;
      for (unsigned sub = 1; sub < (1u << (k - 1)); ++sub) {
        const int extra = std::popcount(sub);
        if (max_degree >= 0 && extra > max_degree) continue;
        if (max_edges >= 0 && m + extra > max_edges) continue;
        if (max_degree >= 0) {
          bool fits = true;
          for (unsigned b = sub; b;) {
            if (deg[std::countr_zero(b)] + 1 > max_degree) {
              fits = false;
              break;
            }
            b &= b - 1;
          }
          if (!fits) continue;
        }
        std::vector<std::uint16_t> adj(k, 0);
        for (int v = 0; v < k - 1; ++v) adj[v] = base[v];
        adj[k - 1] = static_cast<std::uint16_t>(sub);
        for (unsigned b = sub; b;) {
          adj[std::countr_zero(b)] |=
              static_cast<std::uint16_t>(std::uint16_t{1} << (k - 1));
          b &= b - 1;
        }
        const auto ckey = detail::canonical_key(k, adj);
        if (seen.insert(ckey).second) next.push_back(ckey);
      }
    }
    std::sort(next.begin(), next.end());
    keys = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(keys.size());
  const int bits = n * (n - 1) / 2;
  for (const std::uint64_t key : keys) {
    Graph g(n);
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p)
        if ((key >> (bits - 1 - p)) & 1) g.add_edge(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace trailcover
