#ifndef GUCYCLE_LABELED_GRAPH_HPP_
#define GUCYCLE_LABELED_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gucycle {

struct Edge {
  int a = 0;  // a < b
  int b = 0;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A graph on the vertex set {1, ..., order} with labeled vertices. Pairs may
// carry a multiplicity greater than one, so the same type serves both simple
// window graphs and the multigraph windows of the multiset family; a graph is
// simple exactly when is_simple() holds. Equality is labeled equality: same
// order, same multiplicity on every pair.
//
// Storage is a dense upper triangle, one slot per pair {a, b} with a < b.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int order);
  LabeledGraph(int order, const std::vector<Edge>& edges);

  int order() const noexcept { return order_; }

  std::uint32_t multiplicity(int a, int b) const;
  bool has_edge(int a, int b) const { return multiplicity(a, b) != 0; }

  // Sets the multiplicity of {a, b}; zero removes the pair.
  void set_multiplicity(int a, int b, std::uint32_t m);
  void add_edge(int a, int b, std::uint32_t m = 1);

  // Edges sorted by (a, b), zero-multiplicity pairs omitted.
  std::vector<Edge> edges() const;
  // Sum of multiplicities.
  std::size_t edge_count() const;
  bool is_simple() const;
  std::size_t degree(int v) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t slot(int a, int b) const;

  int order_ = 0;
  std::vector<std::uint32_t> mult_;
};

// Alias kept for readability at call sites that deal with multiplicities.
using LabeledMultigraph = LabeledGraph;

// Cyclic host graph G on vertices 1..N observed through windows of size n.
// Every edge joins vertices at cyclic distance 1..n-1; farther pairs are never
// seen by a window and are rejected.
class HostGraph {
 public:
  using PairKey = std::pair<int, int>;  // (min, max)

  HostGraph() = default;
  HostGraph(int size, int window, bool simple,
            std::map<PairKey, std::uint32_t> edges = {});

  int size() const noexcept { return size_; }
  int window() const noexcept { return window_; }
  bool simple() const noexcept { return simple_; }
  const std::map<PairKey, std::uint32_t>& edge_map() const noexcept {
    return edges_;
  }
  std::vector<Edge> edges() const;

  std::uint32_t multiplicity(int u, int v) const;
  // Returns a copy with the multiplicity of {u, v} replaced.
  HostGraph with_multiplicity(int u, int v, std::uint32_t m) const;

  // Host index for any integer position, reduced into [1, N].
  int wrap(long long position) const noexcept;
  int cyclic_distance(int u, int v) const noexcept;

  friend bool operator==(const HostGraph&, const HostGraph&) = default;

 private:
  int size_ = 0;
  int window_ = 0;
  bool simple_ = true;
  std::map<PairKey, std::uint32_t> edges_;
};

// The i-th n-window (1-based): the subgraph induced by host vertices
// v_i, ..., v_{i+n-1} (indices wrapped), relabeled v_{i+j-1} -> j.
LabeledGraph window(const HostGraph& host, int i);

}  // namespace gucycle

#endif  // GUCYCLE_LABELED_GRAPH_HPP_
