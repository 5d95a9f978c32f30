#include "gucycle/labeled_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gucycle/errors.hpp"

namespace gucycle {

LabeledGraph::LabeledGraph(int order) : order_(order) {
  if (order < 0) throw InvalidGraph("negative graph order");
  const auto n = static_cast<std::size_t>(order);
  mult_.assign(n * (n - (n > 0 ? 1 : 0)) / 2, 0);
}

LabeledGraph::LabeledGraph(int order, const std::vector<Edge>& edges)
    : LabeledGraph(order) {
  for (const Edge& e : edges) add_edge(e.a, e.b, e.multiplicity);
}

std::size_t LabeledGraph::slot(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > order_ || a == b) {
    throw InvalidGraph("pair {" + std::to_string(a) + "," + std::to_string(b) +
                       "} is not a pair of distinct vertices in [1," +
                       std::to_string(order_) + "]");
  }
  // Row-major upper triangle, rows a = 1..order-1.
  const auto n = static_cast<std::size_t>(order_);
  const auto r = static_cast<std::size_t>(a - 1);
  const auto c = static_cast<std::size_t>(b - 1);
  return r * n - r * (r + 1) / 2 + (c - r - 1);
}

std::uint32_t LabeledGraph::multiplicity(int a, int b) const {
  return mult_[slot(a, b)];
}

void LabeledGraph::set_multiplicity(int a, int b, std::uint32_t m) {
  mult_[slot(a, b)] = m;
}

void LabeledGraph::add_edge(int a, int b, std::uint32_t m) {
  mult_[slot(a, b)] += m;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (int a = 1; a <= order_; ++a) {
    for (int b = a + 1; b <= order_; ++b) {
      if (auto m = mult_[slot(a, b)]; m != 0) out.push_back({a, b, m});
    }
  }
  return out;
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t total = 0;
  for (auto m : mult_) total += m;
  return total;
}

bool LabeledGraph::is_simple() const {
  return std::all_of(mult_.begin(), mult_.end(),
                     [](std::uint32_t m) { return m <= 1; });
}

std::size_t LabeledGraph::degree(int v) const {
  std::size_t d = 0;
  for (int u = 1; u <= order_; ++u) {
    if (u != v) d += multiplicity(u, v);
  }
  return d;
}

HostGraph::HostGraph(int size, int window, bool simple,
                     std::map<PairKey, std::uint32_t> edges)
    : size_(size), window_(window), simple_(simple) {
  if (window < 2) throw InvalidGraph("window size must be at least 2");
  if (size < window) {
    throw InvalidGraph("host size " + std::to_string(size) +
                       " is smaller than window size " +
                       std::to_string(window));
  }
  for (auto [key, m] : edges) {
    auto [u, v] = key;
    if (u > v) std::swap(u, v);
    if (u < 1 || v > size || u == v) {
      throw InvalidGraph("host edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} out of range");
    }
    if (cyclic_distance(u, v) > window - 1) {
      throw InvalidGraph("host edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} at cyclic distance " +
                         std::to_string(cyclic_distance(u, v)) +
                         " is outside every window");
    }
    if (m == 0) continue;
    if (simple && m != 1) {
      throw InvalidGraph("simple host has multiplicity " + std::to_string(m) +
                         " on {" + std::to_string(u) + "," + std::to_string(v) +
                         "}");
    }
    if (!edges_.emplace(PairKey{u, v}, m).second) {
      throw InvalidGraph("host edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} listed twice");
    }
  }
}

std::vector<Edge> HostGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [key, m] : edges_) out.push_back({key.first, key.second, m});
  return out;
}

std::uint32_t HostGraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? 0 : it->second;
}

HostGraph HostGraph::with_multiplicity(int u, int v, std::uint32_t m) const {
  auto edges = edges_;
  if (u > v) std::swap(u, v);
  if (m == 0) {
    edges.erase({u, v});
  } else {
    edges[{u, v}] = m;
  }
  return HostGraph(size_, window_, simple_, std::move(edges));
}

int HostGraph::wrap(long long position) const noexcept {
  long long r = (position - 1) % size_;
  if (r < 0) r += size_;
  return static_cast<int>(r) + 1;
}

int HostGraph::cyclic_distance(int u, int v) const noexcept {
  const int d = std::abs(u - v);
  return std::min(d, size_ - d);
}

LabeledGraph window(const HostGraph& host, int i) {
  if (i < 1 || i > host.size()) {
    throw InvalidParameters("window index " + std::to_string(i) +
                            " outside [1," + std::to_string(host.size()) + "]");
  }
  const int n = host.window();
  LabeledGraph g(n);
  std::vector<int> vertex(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) vertex[j] = host.wrap(i + j - 1);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (auto m = host.multiplicity(vertex[a], vertex[b]); m != 0) {
        g.set_multiplicity(a, b, m);
      }
    }
  }
  return g;
}

}  // namespace gucycle
