#ifndef GUCYCLE_ARC_DIGRAPH_HPP_
#define GUCYCLE_ARC_DIGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gucycle/errors.hpp"

namespace gucycle {

// Directed multigraph whose arcs carry the objects being cycled. Vertex keys
// are opaque byte strings; loops and parallel arcs are allowed. Each arc also
// carries a sort key that fixes the traversal order of eulerian_circuit.
template <typename Payload>
class ArcDigraph {
 public:
  struct Arc {
    std::size_t tail;
    std::size_t head;
    Payload payload;
    std::string sort_key;
  };

  struct BalanceReport {
    bool balanced = true;
    std::vector<DegreeOffender> offenders;
  };

  // Registers a vertex (idempotent) and returns its index.
  std::size_t add_vertex(const std::string& key) {
    auto [it, inserted] = index_.try_emplace(key, keys_.size());
    if (inserted) {
      keys_.push_back(key);
      out_.emplace_back();
      in_degree_.push_back(0);
    }
    return it->second;
  }

  // Adds an arc between registered vertices.
  void add_arc(const std::string& tail, const std::string& head,
               Payload payload, std::string sort_key) {
    const std::size_t t = vertex_index(tail);
    const std::size_t h = vertex_index(head);
    out_[t].push_back(arcs_.size());
    ++in_degree_[h];
    arcs_.push_back({t, h, std::move(payload), std::move(sort_key)});
  }

  std::size_t vertex_count() const noexcept { return keys_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::string& vertex_key(std::size_t v) const { return keys_.at(v); }
  bool has_vertex(const std::string& key) const {
    return index_.count(key) != 0;
  }

  std::size_t vertex_index(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) {
      throw InvalidParameters("arc endpoint is not a registered vertex");
    }
    return it->second;
  }

  std::size_t out_degree(const std::string& key) const {
    return out_[vertex_index(key)].size();
  }
  std::size_t in_degree(const std::string& key) const {
    return in_degree_[vertex_index(key)];
  }

  BalanceReport balance() const {
    BalanceReport report;
    for (const auto& [key, v] : index_) {
      if (in_degree_[v] != out_[v].size()) {
        report.balanced = false;
        report.offenders.push_back({key, in_degree_[v], out_[v].size()});
      }
    }
    return report;
  }

  bool is_balanced() const { return balance().balanced; }

  // Connectivity of the underlying undirected multigraph restricted to
  // vertices that touch at least one arc.
  bool is_weakly_connected() const {
    const std::size_t n = keys_.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const Arc& a : arcs_) parent[find(a.tail)] = find(a.head);
    std::size_t root = n;
    for (const Arc& a : arcs_) {
      const std::size_t r = find(a.tail);
      if (root == n) {
        root = r;
      } else if (r != root) {
        return false;
      }
    }
    return true;
  }

  // Arc indices of an Eulerian circuit. Hierholzer's algorithm starting at
  // the smallest vertex key that has arcs, always leaving a vertex through
  // its unused arc with the smallest sort key; the result is rotated so the
  // arc with the smallest sort key comes first. Ties on sort key fall back to
  // insertion order.
  std::vector<std::size_t> eulerian_circuit_arcs() const {
    if (auto report = balance(); !report.balanced) {
      throw NotBalanced(std::move(report.offenders));
    }
    if (!is_weakly_connected()) throw NotConnected();
    if (arcs_.empty()) return {};

    auto by_key = [this](std::size_t x, std::size_t y) {
      if (arcs_[x].sort_key != arcs_[y].sort_key) {
        return arcs_[x].sort_key < arcs_[y].sort_key;
      }
      return x < y;
    };
    std::vector<std::vector<std::size_t>> adjacency = out_;
    for (auto& list : adjacency) std::sort(list.begin(), list.end(), by_key);
    std::vector<std::size_t> next(adjacency.size(), 0);

    std::size_t start = 0;
    for (const auto& [key, v] : index_) {  // map iterates keys in order
      if (!out_[v].empty()) {
        start = v;
        break;
      }
    }

    // Stack of (vertex, arc used to reach it); arcs are emitted on pop.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, kNone}};
    std::vector<std::size_t> circuit;
    circuit.reserve(arcs_.size());
    while (!stack.empty()) {
      const std::size_t v = stack.back().first;
      if (next[v] < adjacency[v].size()) {
        const std::size_t arc = adjacency[v][next[v]++];
        stack.emplace_back(arcs_[arc].head, arc);
      } else {
        if (stack.back().second != kNone) circuit.push_back(stack.back().second);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());

    auto first = std::min_element(circuit.begin(), circuit.end(), by_key);
    std::rotate(circuit.begin(), first, circuit.end());
    return circuit;
  }

  // Payloads along eulerian_circuit_arcs(). Throws NotBalanced or
  // NotConnected when no Eulerian circuit exists.
  std::vector<Payload> eulerian_circuit() const {
    std::vector<Payload> out;
    const auto order = eulerian_circuit_arcs();
    out.reserve(order.size());
    for (std::size_t arc : order) out.push_back(arcs_[arc].payload);
    return out;
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> keys_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> in_degree_;
  std::vector<Arc> arcs_;
};

}  // namespace gucycle

#endif  // GUCYCLE_ARC_DIGRAPH_HPP_
