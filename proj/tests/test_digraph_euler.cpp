#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "doctest.h"
#include "gucycle/arc_digraph.hpp"
#include "gucycle/builders.hpp"
#include "gucycle/errors.hpp"
#include "gucycle/string_ucycles.hpp"

using namespace gucycle;

namespace {

template <typename P>
void check_circuit(const ArcDigraph<P>& d, const std::vector<std::size_t>& c) {
  REQUIRE(c.size() == d.arc_count());
  std::vector<std::size_t> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> all(d.arc_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  CHECK(sorted == all);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& arc = d.arcs()[c[i]];
    const auto& next = d.arcs()[c[(i + 1) % c.size()]];
    CHECK(arc.head == next.tail);
  }
}

}  // namespace

TEST_CASE("balance") {
  ArcDigraph<std::string> loops;
  loops.add_vertex("v");
  loops.add_arc("v", "v", "a", "a");
  loops.add_arc("v", "v", "b", "b");
  CHECK(loops.is_balanced());
  CHECK(loops.in_degree("v") == 2);
  CHECK(loops.out_degree("v") == 2);

  ArcDigraph<std::string> one_way;
  one_way.add_vertex("a");
  one_way.add_vertex("b");
  one_way.add_arc("a", "b", "ab", "ab");
  const auto report = one_way.balance();
  CHECK_FALSE(report.balanced);
  REQUIRE(report.offenders.size() == 2);
  CHECK(report.offenders[0].vertex == "a");
  CHECK(report.offenders[0].in_degree == 0);
  CHECK(report.offenders[0].out_degree == 1);
  CHECK(report.offenders[1].vertex == "b");
  CHECK(report.offenders[1].in_degree == 1);
  CHECK(report.offenders[1].out_degree == 0);

  try {
    one_way.eulerian_circuit();
    FAIL("unbalanced digraph produced a circuit");
  } catch (const NotBalanced& e) {
    CHECK(e.offenders().size() == 2);
  }

  CHECK_THROWS_AS(one_way.add_arc("a", "zz", "x", "x"), InvalidParameters);
}

TEST_CASE("permutation arc digraph on n=4 has all degrees 4") {
  const auto d = build_arc_digraph(Family::permutations, 4);
  CHECK(d.is_balanced());
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    CHECK(d.in_degree(d.vertex_key(v)) == 4);
    CHECK(d.out_degree(d.vertex_key(v)) == 4);
  }
}

TEST_CASE("weak connectivity") {
  ArcDigraph<int> one;
  one.add_vertex("x");
  one.add_arc("x", "x", 1, "1");
  CHECK(one.is_weakly_connected());

  ArcDigraph<int> two;
  two.add_vertex("x");
  two.add_vertex("y");
  two.add_arc("x", "x", 1, "1");
  two.add_arc("y", "y", 2, "2");
  CHECK(two.is_balanced());
  CHECK_FALSE(two.is_weakly_connected());
  CHECK_THROWS_AS(two.eulerian_circuit(), NotConnected);

  // Isolated vertices do not count.
  one.add_vertex("isolated");
  CHECK(one.is_weakly_connected());

  const auto partitions = build_arc_digraph(Family::partitions, 3);
  CHECK(partitions.vertex_count() == 2);
  CHECK(partitions.arc_count() == 5);
  CHECK(partitions.is_weakly_connected());
}

TEST_CASE("eulerian circuit examples") {
  ArcDigraph<std::string> loops;
  loops.add_vertex("v");
  loops.add_arc("v", "v", "b", "b");
  loops.add_arc("v", "v", "a", "a");
  CHECK(loops.eulerian_circuit() == std::vector<std::string>{"a", "b"});

  ArcDigraph<std::string> pair;
  pair.add_vertex("p");
  pair.add_vertex("q");
  pair.add_arc("q", "p", "qp", "qp");
  pair.add_arc("p", "q", "pq", "pq");
  CHECK(pair.eulerian_circuit() == std::vector<std::string>{"pq", "qp"});

  const auto involutions = build_arc_digraph(Family::involutions, 4);
  const auto c = involutions.eulerian_circuit_arcs();
  CHECK(c.size() == 10);
  check_circuit(involutions, c);

  ArcDigraph<int> empty;
  CHECK(empty.eulerian_circuit().empty());
}

TEST_CASE("circuit properties on random closed walks") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 8);
    const int steps = 1 + static_cast<int>(rng() % 40);
    ArcDigraph<int> d;
    for (int v = 0; v < vertices + 2; ++v) d.add_vertex(std::to_string(v));
    std::vector<int> walk;
    for (int i = 0; i < steps; ++i) walk.push_back(static_cast<int>(rng() % vertices));
    for (int i = 0; i < steps; ++i) {
      const std::string key(1, static_cast<char>('a' + rng() % 5));
      d.add_arc(std::to_string(walk[i]), std::to_string(walk[(i + 1) % steps]), i, key);
    }
    REQUIRE(d.is_balanced());
    REQUIRE(d.is_weakly_connected());
    const auto c = d.eulerian_circuit_arcs();
    check_circuit(d, c);
    CHECK(c == d.eulerian_circuit_arcs());  // deterministic
    const auto& first_key = d.arcs()[c.front()].sort_key;
    for (const auto& arc : d.arcs()) CHECK(first_key <= arc.sort_key);
  }
}

TEST_CASE("weight-range digraph is balanced for every parameter set") {
  for (int q = 2; q <= 4; ++q) {
    for (int m = 1; m <= 6; ++m) {
      const int top = m * (q - 1);
      for (int s = 0; s <= top; ++s) {
        for (int t = s; t <= top; ++t) {
          const auto d = weight_range_digraph(m, q, s, t);
          REQUIRE(d.is_balanced());
          for (std::size_t v = 0; v < d.vertex_count(); ++v) {
            const auto& key = d.vertex_key(v);
            int w = 0;
            for (char c : key) w += c;
            int expected = 0;
            for (int a = 0; a < q; ++a) expected += (s <= w + a && w + a <= t);
            CHECK(d.out_degree(key) == static_cast<std::size_t>(expected));
            CHECK(d.in_degree(key) == static_cast<std::size_t>(expected));
          }
        }
      }
    }
  }
}
