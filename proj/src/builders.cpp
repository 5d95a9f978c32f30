#include "gucycle/builders.hpp"

#include <algorithm>
#include <unordered_map>

#include "gucycle/errors.hpp"
#include "gucycle/verifier.hpp"

namespace gucycle {

namespace {

Permutation insert_largest(const Permutation& p, std::size_t position) {
  auto word = p.word;
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(position), p.n() + 1);
  return Permutation(std::move(word));
}

// Deletes value 1 and shifts the remaining values down by one.
Permutation drop_smallest(const Permutation& p) {
  std::vector<int> word;
  word.reserve(p.word.size() - 1);
  for (int v : p.word) {
    if (v != 1) word.push_back(v - 1);
  }
  return Permutation(std::move(word));
}

Involution drop_smallest(const Involution& inv) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : inv.pairs) {
    if (a != 1) pairs.emplace_back(a - 1, b - 1);  // 1's partner becomes fixed
  }
  return Involution(inv.n - 1, std::move(pairs));
}

SetPartition drop_smallest(const SetPartition& p) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks) {
    std::vector<int> shifted;
    for (int v : block) {
      if (v != 1) shifted.push_back(v - 1);
    }
    if (!shifted.empty()) blocks.push_back(std::move(shifted));
  }
  return SetPartition(p.n - 1, std::move(blocks));
}

void add_object_arc(ArcDigraph<FamilyObject>& d, const std::string& tail,
                    FamilyObject payload, const FamilyObject& head) {
  std::string key = object_key(payload);
  d.add_arc(tail, object_key(head), std::move(payload), std::move(key));
}

void reject_degenerate(Family family, const FamilyParams& params) {
  const int n = params.n;
  const std::string name(family_name(family));
  if (n <= 2) {
    throw DegenerateParameters(
        name + " with n = " + std::to_string(n) +
        ": every window of a host on so few vertices induces the same labeled "
        "graph, so no Gucycle exists; n must be >= 3");
  }
  if (family == Family::subsets && (params.k == 0 || params.k == n)) {
    throw DegenerateParameters(
        "subsets with k = " + std::to_string(params.k) +
        " form a single-member family; a host would need N = 1 < n vertices");
  }
  if (family == Family::multisets && params.k == 0) {
    throw DegenerateParameters(
        "multisets with k = 0 form a single-member family; a host would need "
        "N = 1 < n vertices");
  }
}

}  // namespace

WindowSequence::WindowSequence(std::vector<LabeledGraph> windows,
                               bool multigraph)
    : windows_(std::move(windows)), simple_(!multigraph) {
  if (windows_.empty()) throw InvalidParameters("window sequence is empty");
  const int n = windows_.front().order();
  for (const auto& w : windows_) {
    if (w.order() != n) {
      throw InvalidParameters("window sequence mixes graph orders");
    }
    if (simple_ && !w.is_simple()) {
      throw InvalidParameters("simple window sequence contains a multigraph");
    }
  }
}

ArcDigraph<FamilyObject> build_arc_digraph(Family family, int n) {
  if (n < 3) {
    throw DegenerateParameters("arc digraphs need n >= 3, got " +
                               std::to_string(n));
  }
  ArcDigraph<FamilyObject> d;
  const auto vertices = enumerate(family, {n - 1, 0});
  for (const auto& v : vertices) d.add_vertex(object_key(v));

  switch (family) {
    case Family::permutations:
      // Insert n at each of the n positions of pi.
      for (const auto& v : vertices) {
        const auto& pi = std::get<Permutation>(v);
        const std::string tail = pi.key();
        for (std::size_t pos = 0; pos <= pi.word.size(); ++pos) {
          auto sigma = insert_largest(pi, pos);
          const auto head = drop_smallest(sigma);
          add_object_arc(d, tail, std::move(sigma), head);
        }
      }
      break;
    case Family::involutions:
      // n stays fixed, or pairs with one of the fixed points of tau.
      for (const auto& v : vertices) {
        const auto& tau = std::get<Involution>(v);
        const std::string tail = tau.key();
        Involution fixed(n, tau.pairs);
        auto head = drop_smallest(fixed);
        add_object_arc(d, tail, std::move(fixed), head);
        for (int p : tau.fixed_points()) {
          auto pairs = tau.pairs;
          pairs.emplace_back(p, n);
          Involution sigma(n, std::move(pairs));
          head = drop_smallest(sigma);
          add_object_arc(d, tail, std::move(sigma), head);
        }
      }
      break;
    case Family::partitions:
      // n joins one of the r blocks, or forms a block of its own.
      for (const auto& v : vertices) {
        const auto& tau = std::get<SetPartition>(v);
        const std::string tail = tau.key();
        for (std::size_t b = 0; b <= tau.blocks.size(); ++b) {
          auto blocks = tau.blocks;
          if (b == blocks.size()) {
            blocks.push_back({n});
          } else {
            blocks[b].push_back(n);
          }
          SetPartition sigma(n, std::move(blocks));
          const auto head = drop_smallest(sigma);
          add_object_arc(d, tail, std::move(sigma), head);
        }
      }
      break;
    default:
      throw InvalidParameters("no arc digraph for family " +
                              std::string(family_name(family)));
  }
  return d;
}

HostGraph host_from_window_sequence(const WindowSequence& seq) {
  const int n = seq.order();
  const auto size = static_cast<long long>(seq.size());
  if (size < n) {
    throw SequenceTooShort("window sequence of length " + std::to_string(size) +
                           " is shorter than the window order " +
                           std::to_string(n));
  }
  const int N = static_cast<int>(size);

  struct Pin {
    std::uint32_t multiplicity;
    std::size_t window;
  };
  std::unordered_map<std::uint64_t, Pin> pins;
  pins.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(n));
  auto wrap = [N](long long p) { return static_cast<int>((p - 1) % N) + 1; };

  for (std::size_t w = 0; w < seq.size(); ++w) {
    const auto& g = seq.windows()[w];
    const long long start = static_cast<long long>(w) + 1;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        int u = wrap(start + a - 1);
        int v = wrap(start + b - 1);
        if (u > v) std::swap(u, v);
        const auto key = (static_cast<std::uint64_t>(u) << 32) |
                         static_cast<std::uint32_t>(v);
        const std::uint32_t m = g.multiplicity(a, b);
        auto [it, inserted] = pins.try_emplace(key, Pin{m, w + 1});
        if (!inserted && it->second.multiplicity != m) {
          throw ConflictingWindows(it->second.window, w + 1, u, v);
        }
      }
    }
  }

  std::map<HostGraph::PairKey, std::uint32_t> edges;
  for (const auto& [key, pin] : pins) {
    if (pin.multiplicity == 0) continue;
    edges.emplace(HostGraph::PairKey{static_cast<int>(key >> 32),
                                     static_cast<int>(key & 0xffffffffu)},
                  pin.multiplicity);
  }
  return HostGraph(N, n, seq.simple(), std::move(edges));
}

WindowSequence subset_windows_from_backbone(const CyclicWord& backbone, int n,
                                            int k) {
  if (n < 3 || k < 1 || k > n - 1) {
    throw InvalidParameters("subset backbone needs n >= 3 and 1 <= k <= n-1");
  }
  if (backbone.alphabet() != 2) {
    throw InvalidParameters("subset backbone must be a binary word");
  }
  std::vector<LabeledGraph> windows;
  windows.reserve(backbone.length());
  for (std::size_t i = 0; i < backbone.length(); ++i) {
    const auto bits = backbone.window(i, static_cast<std::size_t>(n - 1));
    LabeledGraph g(n);
    int ones = 0;
    for (int j = 1; j <= n - 1; ++j) {
      if (bits[j - 1] == 1) {
        g.add_edge(j, j + 1);
        ++ones;
      }
    }
    if (ones == k - 1) {
      g.add_edge(1, n);  // deficit edge e_n
    } else if (ones != k) {
      throw InvalidParameters("backbone window " + std::to_string(i + 1) +
                              " has weight " + std::to_string(ones) +
                              ", expected " + std::to_string(k - 1) + " or " +
                              std::to_string(k));
    }
    windows.push_back(std::move(g));
  }
  return WindowSequence(std::move(windows));
}

WindowSequence multiset_windows_from_backbone(const CyclicWord& backbone, int n,
                                              int k) {
  if (n < 2 || k < 0) {
    throw InvalidParameters("multiset backbone needs n >= 2 and k >= 0");
  }
  if (backbone.alphabet() > k + 1) {
    throw InvalidParameters("multiset backbone alphabet exceeds k+1 letters");
  }
  std::vector<LabeledGraph> windows;
  windows.reserve(backbone.length());
  for (std::size_t i = 0; i < backbone.length(); ++i) {
    const auto letters = backbone.window(i, static_cast<std::size_t>(n - 1));
    LabeledGraph g(n);
    int weight = 0;
    for (int j = 1; j <= n - 1; ++j) {
      if (letters[j - 1] > 0) {
        g.add_edge(j, j + 1, static_cast<std::uint32_t>(letters[j - 1]));
      }
      weight += letters[j - 1];
    }
    if (weight > k) {
      throw InvalidParameters("backbone window " + std::to_string(i + 1) +
                              " has weight " + std::to_string(weight) +
                              " > k = " + std::to_string(k));
    }
    if (weight < k) g.add_edge(1, n, static_cast<std::uint32_t>(k - weight));
    windows.push_back(std::move(g));
  }
  return WindowSequence(std::move(windows), /*multigraph=*/true);
}

HostGraph build_gucycle(Family family, const FamilyParams& params) {
  validate_params(family, params);
  reject_degenerate(family, params);
  const int n = params.n;
  const int k = params.k;

  HostGraph host;
  switch (family) {
    case Family::subsets: {
      const auto backbone = build_weight_range(n - 1, 2, k - 1, k);
      host = host_from_window_sequence(
          subset_windows_from_backbone(backbone, n, k));
      break;
    }
    case Family::multisets: {
      const auto backbone = build_weight_range(n - 1, k + 1, 0, k);
      host = host_from_window_sequence(
          multiset_windows_from_backbone(backbone, n, k));
      break;
    }
    case Family::permutations:
    case Family::involutions:
    case Family::partitions: {
      const auto circuit = build_arc_digraph(family, n).eulerian_circuit();
      std::vector<LabeledGraph> windows;
      windows.reserve(circuit.size());
      for (const auto& object : circuit) windows.push_back(encode(object));
      host = host_from_window_sequence(WindowSequence(std::move(windows)));
      break;
    }
  }

  const auto report = verify(host, family, params);
  if (!report.valid) {
    throw PostconditionFailed("built host failed verification:\n" +
                              report.to_text());
  }
  return host;
}

}  // namespace gucycle
