#include <algorithm>
#include <set>

#include "doctest.h"
#include "gucycle/errors.hpp"
#include "gucycle/families.hpp"

using namespace gucycle;

namespace {

// Independent counting oracles.
std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return k < 0 || k > n ? 0 : c[n][k];
}

std::uint64_t telephone(int n) {
  return n <= 1 ? 1 : telephone(n - 1) + static_cast<std::uint64_t>(n - 1) * telephone(n - 2);
}

std::uint64_t bell(int n) {
  std::vector<std::uint64_t> b{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t next = 0;
    for (int j = 0; j <= m; ++j) next += pascal(m, j) * b[j];
    b.push_back(next);
  }
  return b[n];
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<std::pair<Family, FamilyParams>> small_parameter_sets() {
  std::vector<std::pair<Family, FamilyParams>> out;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 0; k <= std::min(n, 4); ++k) out.push_back({Family::subsets, {n, k}});
    for (int k = 0; k <= 4; ++k) out.push_back({Family::multisets, {n, k}});
  }
  for (int n = 1; n <= 6; ++n) {
    out.push_back({Family::permutations, {n, 0}});
    out.push_back({Family::involutions, {n, 0}});
    out.push_back({Family::partitions, {n, 0}});
  }
  return out;
}

LabeledGraph graph_from_mask(int n, unsigned mask) {
  LabeledGraph g(n);
  int bit = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b, ++bit) {
      if (mask & (1u << bit)) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("enumeration sizes") {
  CHECK(enumerate(Family::subsets, {6, 2}).size() == 15);
  CHECK(enumerate(Family::involutions, {4, 0}).size() == 10);
  CHECK(enumerate(Family::partitions, {4, 0}).size() == 15);
  CHECK(enumerate(Family::permutations, {3, 0}).size() == 6);
}

TEST_CASE("cardinalities match independent recurrences") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(family_size(Family::subsets, {n, k}) == pascal(n, k));
      CHECK(enumerate(Family::subsets, {n, k}).size() == pascal(n, k));
    }
    for (int k = 0; k <= 5; ++k) {
      CHECK(family_size(Family::multisets, {n, k}) == pascal(n + k - 1, k));
      CHECK(enumerate(Family::multisets, {n, k}).size() == pascal(n + k - 1, k));
    }
    CHECK(enumerate(Family::permutations, {n, 0}).size() == factorial(n));
    CHECK(enumerate(Family::involutions, {n, 0}).size() == telephone(n));
    CHECK(enumerate(Family::partitions, {n, 0}).size() == bell(n));
  }
  CHECK(family_size(Family::partitions, {5, 0}) == 52);
  CHECK(family_size(Family::permutations, {20, 0}) == 2432902008176640000ull);
  CHECK_THROWS_AS(family_size(Family::permutations, {21, 0}), InvalidParameters);
  CHECK_THROWS_AS(enumerate(Family::permutations, {13, 0}), InvalidParameters);
}

TEST_CASE("enumeration is sorted and duplicate-free") {
  for (const auto& [family, params] : small_parameter_sets()) {
    const auto all = enumerate(family, params);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("display forms") {
  CHECK(to_string(Subset(6, {5, 2})) == "{2,5}");
  CHECK(to_string(Multiset(3, {3, 1, 1})) == "{1,1,3}");
  CHECK(to_string(Permutation({2, 3, 1, 4})) == "2314");
  CHECK(to_string(Involution(4, {{1, 2}})) == "(12)(3)(4)");
  CHECK(to_string(SetPartition(7, {{1, 3, 4}, {2, 5, 6}, {7}})) == "134|256|7");
  CHECK(to_string(Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9})) ==
        "10,1,2,3,4,5,6,7,8,9");
  CHECK(to_string(Subset(3, {})) == "{}");
}

TEST_CASE("malformed objects are rejected") {
  CHECK_THROWS_AS(Subset(3, {1, 1}), InvalidParameters);
  CHECK_THROWS_AS(Subset(3, {4}), InvalidParameters);
  CHECK_THROWS_AS(Multiset(3, {0}), InvalidParameters);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidParameters);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidParameters);
  CHECK_THROWS_AS(Involution(4, {{1, 2}, {2, 3}}), InvalidParameters);
  CHECK_THROWS_AS(Involution(4, {{1, 1}}), InvalidParameters);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), InvalidParameters);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), InvalidParameters);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2}), InvalidParameters);
  CHECK_THROWS_AS(validate_params(Family::subsets, {3, 4}), InvalidParameters);
  CHECK_THROWS_AS(validate_params(Family::multisets, {3, -1}), InvalidParameters);
  CHECK_THROWS_AS(validate_params(Family::partitions, {0, 0}), InvalidParameters);
}

TEST_CASE("encode examples") {
  CHECK(encode(SetPartition(7, {{1, 3, 4}, {2, 5, 6}, {7}})) ==
        LabeledGraph(7, {{1, 3, 1}, {1, 4, 1}, {3, 4, 1}, {2, 5, 1}, {2, 6, 1}, {5, 6, 1}}));

  LabeledGraph k4(4);
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) k4.add_edge(a, b);
  }
  CHECK(encode(Permutation({4, 3, 2, 1})) == k4);
  CHECK(encode(Permutation({1, 2, 3, 4, 5})) == LabeledGraph(5));
  CHECK(encode(Permutation({2, 3, 1})) == LabeledGraph(3, {{1, 2, 1}, {1, 3, 1}}));
  CHECK(encode(Subset(5, {2, 5})) == LabeledGraph(5, {{2, 3, 1}, {1, 5, 1}}));
  CHECK(encode(Multiset(4, {1, 4, 4})) == LabeledGraph(4, {{1, 2, 1}, {1, 4, 2}}));
  CHECK(encode(Multiset(2, {1, 2})) == LabeledGraph(2, {{1, 2, 2}}));
  CHECK(encode(Involution(4, {{1, 3}})) == LabeledGraph(4, {{1, 3, 1}}));
  CHECK_THROWS_AS(encode(Subset(2, {1})), InvalidParameters);
}

TEST_CASE("decode examples") {
  const LabeledGraph k3(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(decode(k3, Family::permutations, {3, 0}) == FamilyObject(Permutation({3, 2, 1})));

  const LabeledGraph path(3, {{1, 2, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(decode(path, Family::partitions, {3, 0}), NotInFamily);
  CHECK_THROWS_AS(decode(path, Family::involutions, {3, 0}), NotInFamily);

  const LabeledGraph two_edges(5, {{2, 3, 1}, {1, 5, 1}});
  CHECK(decode(two_edges, Family::subsets, {5, 2}) == FamilyObject(Subset(5, {2, 5})));
  CHECK_THROWS_AS(decode(two_edges, Family::subsets, {5, 3}), NotInFamily);
  CHECK_THROWS_AS(decode(LabeledGraph(5, {{1, 3, 1}}), Family::subsets, {5, 1}),
                  NotInFamily);
  CHECK_THROWS_AS(decode(two_edges, Family::subsets, {6, 2}), NotInFamily);

  // 3-cycle of precedence: 1 < 2 (no edge), 2 < 3 (no edge), 3 before 1 (edge).
  CHECK_THROWS_AS(decode(LabeledGraph(3, {{1, 3, 1}}), Family::permutations, {3, 0}),
                  NotInFamily);
  CHECK_THROWS_AS(decode(LabeledGraph(3, {{1, 2, 2}}), Family::permutations, {3, 0}),
                  NotInFamily);

  CHECK(decode(LabeledGraph(3, {{1, 2, 2}}), Family::multisets, {3, 2}) ==
        FamilyObject(Multiset(3, {1, 1})));
  CHECK_THROWS_AS(decode(LabeledGraph(2, {{1, 2, 2}}), Family::multisets, {2, 2}),
                  NotInFamily);
}

TEST_CASE("decode inverts encode on every permutation of [5]") {
  for (const auto& p : enumerate(Family::permutations, {5, 0})) {
    CHECK(decode(encode(p), Family::permutations, {5, 0}) == p);
  }
}

TEST_CASE("round trip and injectivity over full enumerations") {
  for (const auto& [family, params] : small_parameter_sets()) {
    if (family == Family::subsets && params.n < 3) continue;
    std::set<LabeledGraph> images;
    for (const auto& object : enumerate(family, params)) {
      const auto g = encode(object);
      CHECK(decode(g, family, params) == object);
      images.insert(g);
    }
    CHECK(images.size() == family_size(family, params));
  }
}

TEST_CASE("decode accepts exactly the encoded graphs, exhaustively for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (Family family : {Family::permutations, Family::involutions, Family::partitions}) {
      std::set<LabeledGraph> image;
      for (const auto& o : enumerate(family, {n, 0})) image.insert(encode(o));
      std::size_t accepted = 0;
      for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        const auto g = graph_from_mask(n, mask);
        bool ok = true;
        try {
          decode(g, family, {n, 0});
        } catch (const NotInFamily&) {
          ok = false;
        }
        CHECK(ok == (image.count(g) == 1));
        accepted += ok;
      }
      CHECK(accepted == family_size(family, {n, 0}));
    }
  }
}
