#include "gucycle/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gucycle/errors.hpp"

namespace gucycle {

namespace {

constexpr int kMaxGround = 255;  // values are stored as single key bytes
constexpr std::uint64_t kMaxEnumeration = 50'000'000;

std::string make_key(int n, const std::vector<int>& values) {
  std::string key;
  key.reserve(values.size() + 1);
  key.push_back(static_cast<char>(n));
  for (int v : values) key.push_back(static_cast<char>(v));
  return key;
}

void check_ground(int n, const char* what) {
  if (n < 1 || n > kMaxGround) {
    throw InvalidParameters(std::string(what) + ": n must lie in [1," +
                            std::to_string(kMaxGround) + "], got " +
                            std::to_string(n));
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InvalidParameters("family size overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InvalidParameters("family size overflows 64 bits");
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; divide first where possible.
    const std::uint64_t g = std::gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

// Wraps a value into C_n edge index: e_j = {j, j+1}, e_n = {n, 1}.
std::pair<int, int> cycle_edge(int j, int n) {
  const int next = j == n ? 1 : j + 1;
  return {std::min(j, next), std::max(j, next)};
}

// Index j with e_j = {a, b}, or 0 when {a, b} is not an edge of C_n.
int cycle_edge_index(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  if (b == a + 1) return a;
  if (a == 1 && b == n) return n;
  return 0;
}

std::string join_values(const std::vector<int>& values, bool separate) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (separate && i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void enumerate_subsets(int n, int k, int next, std::vector<int>& current,
                       std::vector<FamilyObject>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.emplace_back(Subset(n, current));
    return;
  }
  const int remaining = k - static_cast<int>(current.size());
  for (int v = next; v <= n - remaining + 1; ++v) {
    current.push_back(v);
    enumerate_subsets(n, k, v + 1, current, out);
    current.pop_back();
  }
}

void enumerate_multisets(int n, int k, int next, std::vector<int>& current,
                         std::vector<FamilyObject>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.emplace_back(Multiset(n, current));
    return;
  }
  for (int v = next; v <= n; ++v) {
    current.push_back(v);
    enumerate_multisets(n, k, v, current, out);
    current.pop_back();
  }
}

void enumerate_involutions(int n, std::vector<bool>& used,
                           std::vector<std::pair<int, int>>& pairs,
                           std::vector<FamilyObject>& out) {
  int first = 1;
  while (first <= n && used[first]) ++first;
  if (first > n) {
    out.emplace_back(Involution(n, pairs));
    return;
  }
  used[first] = true;
  enumerate_involutions(n, used, pairs, out);
  for (int partner = first + 1; partner <= n; ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    pairs.emplace_back(first, partner);
    enumerate_involutions(n, used, pairs, out);
    pairs.pop_back();
    used[partner] = false;
  }
  used[first] = false;
}

void enumerate_rgs(int n, std::vector<int>& rgs, int blocks,
                   std::vector<FamilyObject>& out) {
  if (static_cast<int>(rgs.size()) == n) {
    out.emplace_back(SetPartition::from_rgs(rgs));
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs.push_back(b);
    enumerate_rgs(n, rgs, std::max(blocks, b + 1), out);
    rgs.pop_back();
  }
}

[[noreturn]] void reject(const std::string& reason) { throw NotInFamily(reason); }

void require_simple(const LabeledGraph& g) {
  if (!g.is_simple()) reject("graph has a multiple edge");
}

FamilyObject decode_subset(const LabeledGraph& g, int n, int k) {
  require_simple(g);
  std::vector<int> members;
  for (const Edge& e : g.edges()) {
    const int j = cycle_edge_index(e.a, e.b, n);
    if (j == 0) {
      reject("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
             "} is not an edge of C_" + std::to_string(n));
    }
    members.push_back(j);
  }
  if (static_cast<int>(members.size()) != k) {
    reject("expected " + std::to_string(k) + " edges, found " +
           std::to_string(members.size()));
  }
  std::sort(members.begin(), members.end());
  return Subset(n, std::move(members));
}

FamilyObject decode_multiset(const LabeledGraph& g, int n, int k) {
  if (n == 2) {
    reject("multiset windows on 2 vertices are ambiguous: e_1 and e_2 join "
           "the same pair");
  }
  std::vector<int> elements;
  for (const Edge& e : g.edges()) {
    const int j = cycle_edge_index(e.a, e.b, n);
    if (j == 0) {
      reject("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
             "} is not an edge of C_" + std::to_string(n));
    }
    elements.insert(elements.end(), e.multiplicity, j);
  }
  if (static_cast<int>(elements.size()) != k) {
    reject("expected total multiplicity " + std::to_string(k) + ", found " +
           std::to_string(elements.size()));
  }
  std::sort(elements.begin(), elements.end());
  return Multiset(n, std::move(elements));
}

FamilyObject decode_permutation(const LabeledGraph& g, int n) {
  require_simple(g);
  // b precedes a when (b < a and {a,b} absent) or (b > a and {a,b} present).
  // The relation is a tournament; it is a strict total order exactly when the
  // in-scores are 0..n-1, and the in-score of a is then its position.
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int a = 1; a <= n; ++a) {
    int before = 0;
    for (int b = 1; b <= n; ++b) {
      if (b == a) continue;
      const bool edge = g.has_edge(a, b);
      if ((b < a && !edge) || (b > a && edge)) ++before;
    }
    if (word[before] != 0) {
      reject("precedence relation is not transitive");
    }
    word[before] = a;
  }
  return Permutation(std::move(word));
}

FamilyObject decode_involution(const LabeledGraph& g, int n) {
  require_simple(g);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) > 1) {
      reject("vertex " + std::to_string(v) +
             " lies in a component that is neither K_1 nor K_2");
    }
  }
  for (const Edge& e : g.edges()) pairs.emplace_back(e.a, e.b);
  return Involution(n, std::move(pairs));
}

FamilyObject decode_partition(const LabeledGraph& g, int n) {
  require_simple(g);
  std::vector<int> component(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> blocks;
  for (int start = 1; start <= n; ++start) {
    if (component[start] != -1) continue;
    const int id = static_cast<int>(blocks.size());
    std::vector<int> block{start};
    component[start] = id;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (int u = 1; u <= n; ++u) {
        if (u != block[head] && component[u] == -1 &&
            g.has_edge(block[head], u)) {
          component[u] = id;
          block.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.has_edge(block[i], block[j])) {
          reject("component containing " + std::to_string(start) +
                 " is not a complete graph");
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::subsets: return "subsets";
    case Family::multisets: return "multisets";
    case Family::permutations: return "permutations";
    case Family::involutions: return "involutions";
    case Family::partitions: return "partitions";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
  for (Family f : {Family::subsets, Family::multisets, Family::permutations,
                   Family::involutions, Family::partitions}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool family_uses_k(Family f) noexcept {
  return f == Family::subsets || f == Family::multisets;
}

Subset::Subset(int n_, std::vector<int> members_)
    : n(n_), members(std::move(members_)) {
  check_ground(n, "subset");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n ||
        (i > 0 && members[i] == members[i - 1])) {
      throw InvalidParameters("subset members must be distinct values in [1," +
                              std::to_string(n) + "]");
    }
  }
}

std::string Subset::key() const { return make_key(n, members); }

Multiset::Multiset(int n_, std::vector<int> elements_)
    : n(n_), elements(std::move(elements_)) {
  check_ground(n, "multiset");
  std::sort(elements.begin(), elements.end());
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw InvalidParameters("multiset elements must lie in [1," +
                              std::to_string(n) + "]");
    }
  }
}

int Multiset::count(int element) const {
  return static_cast<int>(
      std::count(elements.begin(), elements.end(), element));
}

std::string Multiset::key() const { return make_key(n, elements); }

Permutation::Permutation(std::vector<int> word_) : word(std::move(word_)) {
  const int n = static_cast<int>(word.size());
  check_ground(n, "permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidParameters("permutation word must use each of 1.." +
                              std::to_string(n) + " exactly once");
    }
    seen[v] = true;
  }
}

std::string Permutation::key() const { return make_key(n(), word); }

Involution::Involution(int n_, std::vector<std::pair<int, int>> pairs_)
    : n(n_), pairs(std::move(pairs_)) {
  check_ground(n, "involution");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b || used[a] || used[b]) {
      throw InvalidParameters(
          "involution transpositions must be disjoint pairs in [1," +
          std::to_string(n) + "]");
    }
    used[a] = used[b] = true;
  }
  std::sort(pairs.begin(), pairs.end());
}

std::vector<int> Involution::one_line() const {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  for (auto [a, b] : pairs) {
    image[a - 1] = b;
    image[b - 1] = a;
  }
  return image;
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> fixed;
  const auto image = one_line();
  for (int v = 1; v <= n; ++v) {
    if (image[v - 1] == v) fixed.push_back(v);
  }
  return fixed;
}

std::string Involution::key() const { return make_key(n, one_line()); }

SetPartition::SetPartition(int n_, std::vector<std::vector<int>> blocks_)
    : n(n_), blocks(std::move(blocks_)) {
  check_ground(n, "set partition");
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  int total = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw InvalidParameters("set partition has empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n || covered[v]) {
        throw InvalidParameters("set partition blocks must be disjoint and "
                                "cover [1," + std::to_string(n) + "]");
      }
      covered[v] = true;
      ++total;
    }
  }
  if (total != n) {
    throw InvalidParameters("set partition blocks must cover [1," +
                            std::to_string(n) + "]");
  }
  std::sort(blocks.begin(), blocks.end());
}

std::vector<int> SetPartition::rgs() const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) out[v - 1] = static_cast<int>(b);
  }
  return out;
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const auto b = static_cast<std::size_t>(rgs[i]);
    if (rgs[i] < 0 || b > blocks.size()) {
      throw InvalidParameters("not a restricted growth string");
    }
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

std::string SetPartition::key() const { return make_key(n, rgs()); }

Family family_of(const FamilyObject& object) noexcept {
  return static_cast<Family>(object.index());
}

std::string object_key(const FamilyObject& object) {
  return std::visit([](const auto& x) { return x.key(); }, object);
}

std::string to_string(const FamilyObject& object) {
  struct Visitor {
    std::string operator()(const Subset& s) const {
      return "{" + join_values(s.members, true) + "}";
    }
    std::string operator()(const Multiset& m) const {
      return "{" + join_values(m.elements, true) + "}";
    }
    std::string operator()(const Permutation& p) const {
      return join_values(p.word, p.n() > 9);
    }
    std::string operator()(const Involution& inv) const {
      const bool wide = inv.n > 9;
      const auto image = inv.one_line();
      std::string out;
      for (int v = 1; v <= inv.n; ++v) {
        const int w = image[v - 1];
        if (w < v) continue;
        out += '(' + std::to_string(v);
        if (w != v) out += (wide ? "," : "") + std::to_string(w);
        out += ')';
      }
      return out;
    }
    std::string operator()(const SetPartition& p) const {
      std::string out;
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b != 0) out += '|';
        out += join_values(p.blocks[b], p.n > 9);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, object);
}

void validate_params(Family family, const FamilyParams& params) {
  check_ground(params.n, family_name(family).data());
  switch (family) {
    case Family::subsets:
      if (params.k < 0 || params.k > params.n) {
        throw InvalidParameters("subsets: k must lie in [0,n]");
      }
      break;
    case Family::multisets:
      if (params.k < 0) throw InvalidParameters("multisets: k must be >= 0");
      break;
    default:
      break;
  }
}

std::uint64_t family_size(Family family, const FamilyParams& params) {
  validate_params(family, params);
  const auto n = static_cast<std::uint64_t>(params.n);
  const auto k = static_cast<std::uint64_t>(params.k);
  switch (family) {
    case Family::subsets:
      return binomial(n, k);
    case Family::multisets:
      return binomial(n + k - 1, k);
    case Family::permutations: {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) f = checked_mul(f, i);
      return f;
    }
    case Family::involutions: {
      // I(m) = I(m-1) + (m-1) I(m-2), I(0) = I(1) = 1.
      std::uint64_t prev = 1, cur = 1;
      for (std::uint64_t m = 2; m <= n; ++m) {
        const std::uint64_t next = checked_add(cur, checked_mul(m - 1, prev));
        prev = cur;
        cur = next;
      }
      return cur;
    }
    case Family::partitions: {
      // B(m+1) = sum_j C(m, j) B(j).
      std::vector<std::uint64_t> bell{1};
      for (std::uint64_t m = 0; m < n; ++m) {
        std::uint64_t next = 0;
        for (std::uint64_t j = 0; j <= m; ++j) {
          next = checked_add(next, checked_mul(binomial(m, j), bell[j]));
        }
        bell.push_back(next);
      }
      return bell[n];
    }
  }
  return 0;
}

std::vector<FamilyObject> enumerate(Family family, const FamilyParams& params) {
  const std::uint64_t size = family_size(family, params);
  if (size > kMaxEnumeration) {
    throw InvalidParameters("family has " + std::to_string(size) +
                            " members; refusing to enumerate more than " +
                            std::to_string(kMaxEnumeration));
  }
  std::vector<FamilyObject> out;
  out.reserve(static_cast<std::size_t>(size));
  const int n = params.n;
  switch (family) {
    case Family::subsets: {
      std::vector<int> current;
      enumerate_subsets(n, params.k, 1, current, out);
      break;
    }
    case Family::multisets: {
      std::vector<int> current;
      enumerate_multisets(n, params.k, 1, current, out);
      break;
    }
    case Family::permutations: {
      std::vector<int> word(static_cast<std::size_t>(n));
      std::iota(word.begin(), word.end(), 1);
      do {
        out.emplace_back(Permutation(word));
      } while (std::next_permutation(word.begin(), word.end()));
      break;
    }
    case Family::involutions: {
      std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
      std::vector<std::pair<int, int>> pairs;
      enumerate_involutions(n, used, pairs, out);
      std::sort(out.begin(), out.end());
      break;
    }
    case Family::partitions: {
      std::vector<int> rgs;
      enumerate_rgs(n, rgs, 0, out);
      break;
    }
  }
  return out;
}

LabeledGraph encode(const FamilyObject& object) {
  struct Visitor {
    LabeledGraph operator()(const Subset& s) const {
      if (s.n < 3) {
        throw InvalidParameters("subset graphs need n >= 3 (C_n edges)");
      }
      LabeledGraph g(s.n);
      for (int j : s.members) {
        auto [a, b] = cycle_edge(j, s.n);
        g.add_edge(a, b);
      }
      return g;
    }
    LabeledGraph operator()(const Multiset& m) const {
      if (m.n < 2) {
        throw InvalidParameters("multiset graphs need n >= 2 (C_n edges)");
      }
      LabeledGraph g(m.n);
      for (int j : m.elements) {
        auto [a, b] = cycle_edge(j, m.n);
        g.add_edge(a, b);
      }
      return g;
    }
    LabeledGraph operator()(const Permutation& p) const {
      const int n = p.n();
      std::vector<int> position(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i < n; ++i) position[p.word[i]] = i;
      LabeledGraph g(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (position[i] > position[j]) g.add_edge(i, j);
        }
      }
      return g;
    }
    LabeledGraph operator()(const Involution& inv) const {
      LabeledGraph g(inv.n);
      for (auto [a, b] : inv.pairs) g.add_edge(a, b);
      return g;
    }
    LabeledGraph operator()(const SetPartition& p) const {
      LabeledGraph g(p.n);
      for (const auto& block : p.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
          for (std::size_t j = i + 1; j < block.size(); ++j) {
            g.add_edge(block[i], block[j]);
          }
        }
      }
      return g;
    }
  };
  return std::visit(Visitor{}, object);
}

FamilyObject decode(const LabeledGraph& graph, Family family,
                    const FamilyParams& params) {
  validate_params(family, params);
  const int n = params.n;
  if (graph.order() != n) {
    reject("graph has order " + std::to_string(graph.order()) + ", expected " +
           std::to_string(n));
  }
  FamilyObject result;
  switch (family) {
    case Family::subsets:
      if (n < 3) reject("subset graphs need n >= 3");
      result = decode_subset(graph, n, params.k);
      break;
    case Family::multisets:
      result = decode_multiset(graph, n, params.k);
      break;
    case Family::permutations:
      result = decode_permutation(graph, n);
      break;
    case Family::involutions:
      result = decode_involution(graph, n);
      break;
    case Family::partitions:
      result = decode_partition(graph, n);
      break;
  }
  if (encode(result) != graph) {
    reject("graph is not the encoding of " + to_string(result));
  }
  return result;
}

}  // namespace gucycle
