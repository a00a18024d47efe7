#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trailcover {

// Finite undirected multigraph with dense integer ids.
//
// Vertices are 0..n-1. Edge ids follow construction order and stay stable.
// Parallel edges and self-loops are allowed; a self-loop contributes 2 to
// its endpoint's degree and appears twice in that vertex's incidence list.
// Graphs are treated as immutable once construction is finished; all
// operations below only read them, so concurrent readers are safe.
class Graph {
 public:
  struct Incidence {
    int edge;   // edge id
    int other;  // endpoint opposite to the list owner (equals owner for loops)
  };

  Graph() = default;

  explicit Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    incidence_.resize(static_cast<std::size_t>(vertex_count));
  }

  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : Graph(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  // Appends an edge and returns its id. Intended for the construction phase
  // only; see the immutability note above.
  int add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    const int id = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    incidence_[static_cast<std::size_t>(u)].push_back({id, v});
    incidence_[static_cast<std::size_t>(v)].push_back({id, u});
    return id;
  }

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<int, int> endpoints(int edge_id) const {
    require_edge(edge_id);
    return edges_[static_cast<std::size_t>(edge_id)];
  }

  bool is_loop(int edge_id) const {
    const auto [u, v] = endpoints(edge_id);
    return u == v;
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Incident edges of v in ascending edge-id order. A loop at v occurs twice.
  const std::vector<Incidence>& incident(int v) const {
    require_vertex(v);
    return incidence_[static_cast<std::size_t>(v)];
  }

  // Number of edge endpoints at v; a self-loop counts 2.
  int degree(int v) const {
    require_vertex(v);
    return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size());
  }

  void require_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex id " + std::to_string(v) +
                              " out of range [0, " +
                              std::to_string(vertex_count()) + ")");
  }

  void require_edge(int e) const {
    if (e < 0 || e >= edge_count())
      throw std::out_of_range("edge id " + std::to_string(e) +
                              " out of range [0, " +
                              std::to_string(edge_count()) + ")");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

// Connected-component labeling of g with the masked edges removed.
// excluded_mask[e] != 0 drops edge e. Labels are dense and assigned in
// order of first discovery while scanning vertices ascending, so the
// output is deterministic. Runs in O(n + m).
inline std::vector<int> components_masked(const Graph& g,
                                          const std::vector<char>& excluded_mask) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (const auto& inc : g.incident(v)) {
        if (inc.edge < static_cast<int>(excluded_mask.size()) &&
            excluded_mask[static_cast<std::size_t>(inc.edge)])
          continue;
        if (label[static_cast<std::size_t>(inc.other)] < 0) {
          label[static_cast<std::size_t>(inc.other)] = next;
          queue.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  return label;
}

// Component labeling of g - excluded_edges. Two vertices share a label iff
// some path avoiding every excluded edge joins them.
inline std::vector<int> components(const Graph& g,
                                   std::span<const int> excluded_edges) {
  std::vector<char> mask(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : excluded_edges) {
    g.require_edge(e);
    mask[static_cast<std::size_t>(e)] = 1;
  }
  return components_masked(g, mask);
}

inline std::vector<int> components(const Graph& g) {
  return components(g, std::span<const int>{});
}

}  // namespace trailcover
