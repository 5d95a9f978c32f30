#ifndef GUCYCLE_FAMILIES_HPP_
#define GUCYCLE_FAMILIES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gucycle/labeled_graph.hpp"

namespace gucycle {

enum class Family { subsets, multisets, permutations, involutions, partitions };

std::string_view family_name(Family f) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;
// Families whose objects carry a size parameter k besides n.
bool family_uses_k(Family f) noexcept;

struct FamilyParams {
  int n = 0;
  int k = 0;  // ignored for permutations, involutions and partitions

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Every object type exposes key(): a byte string that starts with n and then
// lists a canonical integer representation. Objects are ordered by key, which
// is the lexicographic order used for enumeration and circuit tie-breaking.

// A k-subset of [n], members sorted ascending.
struct Subset {
  int n = 0;
  std::vector<int> members;

  Subset() = default;
  Subset(int n, std::vector<int> members);
  std::string key() const;
};

// A multiset over [n]; elements sorted ascending with repetition, so {1,1,3}
// holds 1 twice and 3 once.
struct Multiset {
  int n = 0;
  std::vector<int> elements;

  Multiset() = default;
  Multiset(int n, std::vector<int> elements);
  int count(int element) const;
  int size() const { return static_cast<int>(elements.size()); }
  std::string key() const;
};

// One-line word pi_1 ... pi_n.
struct Permutation {
  std::vector<int> word;

  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  int n() const { return static_cast<int>(word.size()); }
  std::string key() const;
};

// Disjoint transpositions on [n]; unpaired elements are fixed points.
struct Involution {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // first < second, sorted

  Involution() = default;
  Involution(int n, std::vector<std::pair<int, int>> pairs);
  std::vector<int> one_line() const;
  std::vector<int> fixed_points() const;
  std::string key() const;  // ordered by one-line word
};

// Blocks sorted by least element, each block sorted ascending.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  // Restricted growth string: rgs[i] is the block index of element i+1.
  std::vector<int> rgs() const;
  static SetPartition from_rgs(const std::vector<int>& rgs);
  std::string key() const;  // ordered by restricted growth string
};

#define GUCYCLE_KEY_ORDERING(T)                                         \
  inline bool operator==(const T& x, const T& y) {                      \
    return x.key() == y.key();                                          \
  }                                                                     \
  inline std::strong_ordering operator<=>(const T& x, const T& y) {     \
    return x.key() <=> y.key();                                         \
  }
GUCYCLE_KEY_ORDERING(Subset)
GUCYCLE_KEY_ORDERING(Multiset)
GUCYCLE_KEY_ORDERING(Permutation)
GUCYCLE_KEY_ORDERING(Involution)
GUCYCLE_KEY_ORDERING(SetPartition)
#undef GUCYCLE_KEY_ORDERING

using FamilyObject =
    std::variant<Subset, Multiset, Permutation, Involution, SetPartition>;

Family family_of(const FamilyObject& object) noexcept;
std::string object_key(const FamilyObject& object);

// Display forms: {2,5}  {1,1,3}  2314  (12)(3)(4)  134|256|7. Once n exceeds
// 9 the compact forms separate values with commas.
std::string to_string(const FamilyObject& object);

// Throws InvalidParameters when params are outside the family's domain.
void validate_params(Family family, const FamilyParams& params);
// Exact family size; throws InvalidParameters on 64-bit overflow.
std::uint64_t family_size(Family family, const FamilyParams& params);

// All members in ascending key order.
std::vector<FamilyObject> enumerate(Family family, const FamilyParams& params);

// Window-graph representation of an object:
//   subsets       edge e_j = {j, j+1 mod n} per member j (C_n edges)
//   multisets     multiplicity of e_j = count of j
//   permutations  vertices are values; {i,j}, i<j, iff i appears after j
//   involutions   one K_2 per transposition
//   partitions    one clique per block
LabeledGraph encode(const FamilyObject& object);

// Left inverse of encode with full validation; throws NotInFamily.
FamilyObject decode(const LabeledGraph& graph, Family family,
                    const FamilyParams& params);

}  // namespace gucycle

#endif  // GUCYCLE_FAMILIES_HPP_
