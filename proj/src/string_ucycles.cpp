#include "gucycle/string_ucycles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gucycle/errors.hpp"
#include "gucycle/families.hpp"

namespace gucycle {

namespace {

constexpr long long kMaxWords = 20'000'000;

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::string byte_key(const std::vector<int>& symbols) {
  std::string key;
  key.reserve(symbols.size());
  for (int s : symbols) key.push_back(static_cast<char>(s));
  return key;
}

long long checked_power(int base, int exponent) {
  long long r = 1;
  for (int i = 0; i < exponent; ++i) {
    r *= base;
    if (r > kMaxWords) {
      throw InvalidParameters("word space " + std::to_string(base) + "^" +
                              std::to_string(exponent) + " is too large");
    }
  }
  return r;
}

// Calls visit(word) for every q-ary word of length m, in lexicographic order.
void for_each_word(int m, int q, const std::function<void(const std::vector<int>&)>& visit) {
  checked_power(q, m);
  std::vector<int> word(static_cast<std::size_t>(m), 0);
  for (;;) {
    visit(word);
    int i = m - 1;
    while (i >= 0 && word[i] == q - 1) word[i--] = 0;
    if (i < 0) return;
    ++word[i];
  }
}

int weight(const std::vector<int>& w) {
  return std::accumulate(w.begin(), w.end(), 0);
}

std::string join(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string word_label(const std::vector<int>& w) {
  const bool compact =
      std::all_of(w.begin(), w.end(), [](int s) { return s >= 0 && s < 36; });
  if (!compact) return join(w, ",");
  std::string out;
  for (int s : w) out += kDigits[static_cast<std::size_t>(s)];
  return out;
}

std::string set_label(const std::vector<int>& members) {
  return "{" + join(members, ",") + "}";
}

// Multiset of [m] whose multiplicity vector is w.
std::vector<int> multiplicity_vector_to_elements(const std::vector<int>& w) {
  std::vector<int> elements;
  for (std::size_t j = 0; j < w.size(); ++j) {
    elements.insert(elements.end(), static_cast<std::size_t>(w[j]),
                    static_cast<int>(j) + 1);
  }
  return elements;
}

std::vector<int> ones_positions(const std::vector<int>& w) {
  std::vector<int> positions;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 1) positions.push_back(static_cast<int>(j) + 1);
  }
  return positions;
}

struct ResolvedSpace {
  int q = 2;
  int s = 0;
  int t = 0;
  int lo = 0;
  int hi = 0;
};

ResolvedSpace resolve(const CyclicWord& word, int m, DecodeMode mode,
                      const StringSpace& space) {
  ResolvedSpace r;
  const auto& sym = word.symbols();
  const int largest = *std::max_element(sym.begin(), sym.end());
  const int smallest = *std::min_element(sym.begin(), sym.end());
  r.q = space.q.value_or(std::max(2, largest + 1));
  if (r.q < 2) throw InvalidParameters("alphabet size q must be >= 2");
  r.s = space.min_weight.value_or(0);
  const int top = mode == DecodeMode::binary_subset ? m : m * (r.q - 1);
  r.t = space.max_weight.value_or(top);
  if (r.s < 0 || r.s > r.t) {
    throw InvalidParameters("weight range must satisfy 0 <= s <= t");
  }
  r.lo = space.lo.value_or(smallest);
  r.hi = space.hi.value_or(largest);
  if (r.lo > r.hi) throw InvalidParameters("symbol range must satisfy lo <= hi");
  return r;
}

using Decoded = std::pair<std::string, std::string>;  // (key, error)

Decoded decode_window(const std::vector<int>& w, DecodeMode mode,
                      const ResolvedSpace& sp) {
  auto fail = [](std::string reason) { return Decoded{{}, std::move(reason)}; };
  switch (mode) {
    case DecodeMode::exact_word:
    case DecodeMode::weight_vector: {
      for (int s : w) {
        if (s >= sp.q) {
          return fail("symbol " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(sp.q));
        }
      }
      const int h = weight(w);
      if (h < sp.s || h > sp.t) {
        return fail("weight " + std::to_string(h) + " outside [" +
                    std::to_string(sp.s) + "," + std::to_string(sp.t) + "]");
      }
      if (mode == DecodeMode::exact_word) return {word_label(w), {}};
      return {set_label(multiplicity_vector_to_elements(w)), {}};
    }
    case DecodeMode::binary_subset: {
      for (int s : w) {
        if (s > 1) return fail("symbol " + std::to_string(s) + " is not binary");
      }
      const auto members = ones_positions(w);
      const int size = static_cast<int>(members.size());
      if (size < sp.s || size > sp.t) {
        return fail("subset size " + std::to_string(size) + " outside [" +
                    std::to_string(sp.s) + "," + std::to_string(sp.t) + "]");
      }
      return {set_label(members), {}};
    }
    case DecodeMode::window_multiset: {
      auto sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (sorted.front() < sp.lo || sorted.back() > sp.hi) {
        return fail("symbol outside [" + std::to_string(sp.lo) + "," +
                    std::to_string(sp.hi) + "]");
      }
      return {set_label(sorted), {}};
    }
    case DecodeMode::order_iso: {
      auto sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return fail("window repeats a symbol; relative order is undefined");
      }
      std::vector<int> pattern;
      pattern.reserve(w.size());
      for (int s : w) {
        pattern.push_back(static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()) + 1);
      }
      return {to_string(Permutation(std::move(pattern))), {}};
    }
    case DecodeMode::letter_partition: {
      std::vector<int> rgs;
      std::vector<int> seen;
      for (int s : w) {
        auto it = std::find(seen.begin(), seen.end(), s);
        if (it == seen.end()) {
          rgs.push_back(static_cast<int>(seen.size()));
          seen.push_back(s);
        } else {
          rgs.push_back(static_cast<int>(it - seen.begin()));
        }
      }
      return {to_string(SetPartition::from_rgs(rgs)), {}};
    }
  }
  return fail("unknown mode");
}

std::vector<std::pair<std::string, std::string>> expected_space(
    int m, DecodeMode mode, const ResolvedSpace& sp) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&out](std::string label) { out.emplace_back(label, label); };
  switch (mode) {
    case DecodeMode::exact_word:
    case DecodeMode::weight_vector:
    case DecodeMode::binary_subset: {
      const int q = mode == DecodeMode::binary_subset ? 2 : sp.q;
      for_each_word(m, q, [&](const std::vector<int>& w) {
        const int h = weight(w);
        if (h < sp.s || h > sp.t) return;
        if (mode == DecodeMode::exact_word) {
          add(word_label(w));
        } else if (mode == DecodeMode::weight_vector) {
          add(set_label(multiplicity_vector_to_elements(w)));
        } else {
          add(set_label(ones_positions(w)));
        }
      });
      break;
    }
    case DecodeMode::window_multiset: {
      const FamilyParams params{sp.hi - sp.lo + 1, m};
      for (const auto& obj : enumerate(Family::multisets, params)) {
        auto elements = std::get<Multiset>(obj).elements;
        for (int& e : elements) e += sp.lo - 1;
        add(set_label(elements));
      }
      break;
    }
    case DecodeMode::order_iso:
      for (const auto& obj : enumerate(Family::permutations, {m, 0})) {
        add(to_string(obj));
      }
      break;
    case DecodeMode::letter_partition:
      for (const auto& obj : enumerate(Family::partitions, {m, 0})) {
        add(to_string(obj));
      }
      break;
  }
  return out;
}

}  // namespace

CyclicWord::CyclicWord(std::vector<int> symbols, int q)
    : symbols_(std::move(symbols)), q_(q) {
  if (symbols_.empty()) throw InvalidParameters("cyclic word must be nonempty");
  if (q_ < 1) throw InvalidParameters("alphabet size must be positive");
  for (int s : symbols_) {
    if (s < 0 || s >= q_) {
      throw InvalidParameters("symbol " + std::to_string(s) +
                              " outside alphabet [0," + std::to_string(q_ - 1) +
                              "]");
    }
  }
}

std::vector<int> CyclicWord::window(std::size_t i, std::size_t m) const {
  std::vector<int> w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = symbols_[(i + j) % symbols_.size()];
  return w;
}

std::string_view mode_name(DecodeMode mode) noexcept {
  switch (mode) {
    case DecodeMode::exact_word: return "exact_word";
    case DecodeMode::window_multiset: return "window_multiset";
    case DecodeMode::binary_subset: return "binary_subset";
    case DecodeMode::weight_vector: return "weight_vector";
    case DecodeMode::order_iso: return "order_iso";
    case DecodeMode::letter_partition: return "letter_partition";
  }
  return "unknown";
}

std::optional<DecodeMode> mode_from_name(std::string_view name) noexcept {
  for (DecodeMode m : {DecodeMode::exact_word, DecodeMode::window_multiset,
                       DecodeMode::binary_subset, DecodeMode::weight_vector,
                       DecodeMode::order_iso, DecodeMode::letter_partition}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

CyclicWord word_from_text(std::string_view text, DecodeMode mode) {
  if (text.empty()) throw InvalidParameters("empty word");
  std::vector<int> symbols;
  symbols.reserve(text.size());
  if (mode == DecodeMode::letter_partition) {
    std::string order;
    for (char c : text) {
      auto pos = order.find(c);
      if (pos == std::string::npos) {
        pos = order.size();
        order.push_back(c);
      }
      symbols.push_back(static_cast<int>(pos));
    }
    return CyclicWord(std::move(symbols), std::max<int>(1, static_cast<int>(order.size())));
  }
  int largest = 0;
  for (char c : text) {
    const auto pos = kDigits.find(c);
    if (pos == std::string_view::npos) {
      throw InvalidParameters(std::string("symbol '") + c +
                              "' is not one of 0-9, a-z");
    }
    symbols.push_back(static_cast<int>(pos));
    largest = std::max(largest, static_cast<int>(pos));
  }
  return CyclicWord(std::move(symbols), std::max(2, largest + 1));
}

std::string word_to_text(const CyclicWord& word) {
  if (word.alphabet() > static_cast<int>(kDigits.size())) {
    throw InvalidParameters("alphabet too large for single-character output");
  }
  std::string out;
  for (int s : word.symbols()) out += kDigits[static_cast<std::size_t>(s)];
  return out;
}

ArcDigraph<std::vector<int>> weight_range_digraph(int m, int q, int s, int t) {
  if (m < 1) throw InvalidParameters("word length m must be >= 1");
  if (q < 2) throw InvalidParameters("alphabet size q must be >= 2");
  if (s < 0 || s > t || t > m * (q - 1)) {
    throw InvalidParameters("weights must satisfy 0 <= s <= t <= m(q-1)");
  }
  ArcDigraph<std::vector<int>> d;
  for_each_word(m - 1, q, [&d](const std::vector<int>& v) {
    d.add_vertex(byte_key(v));
  });
  for_each_word(m - 1, q, [&](const std::vector<int>& v) {
    const int h = weight(v);
    const std::string tail = byte_key(v);
    std::vector<int> payload = v;
    payload.push_back(0);
    for (int a = 0; a < q; ++a) {
      if (h + a < s || h + a > t) continue;
      payload.back() = a;
      std::vector<int> head(payload.begin() + 1, payload.end());
      d.add_arc(tail, byte_key(head), payload, byte_key(payload));
    }
  });
  return d;
}

CyclicWord build_weight_range(int m, int q, int s, int t) {
  const auto digraph = weight_range_digraph(m, q, s, t);
  const auto circuit = digraph.eulerian_circuit();
  std::vector<int> symbols;
  symbols.reserve(circuit.size());
  for (const auto& payload : circuit) symbols.push_back(payload.front());
  CyclicWord word(std::move(symbols), q);

  StringSpace space;
  space.q = q;
  space.min_weight = s;
  space.max_weight = t;
  const auto report = verify_string(word, m, DecodeMode::exact_word, space);
  if (!report.valid) {
    throw PostconditionFailed("weight-range word failed self-verification:\n" +
                              report.to_text());
  }
  return word;
}

VerificationReport verify_string(const CyclicWord& word, int m, DecodeMode mode,
                                 const StringSpace& space) {
  if (m < 1) throw InvalidParameters("window length must be >= 1");
  const ResolvedSpace sp = resolve(word, m, mode, space);
  CoverageTally tally(expected_space(m, mode, sp));
  for (std::size_t i = 0; i < word.length(); ++i) {
    auto [key, error] =
        decode_window(word.window(i, static_cast<std::size_t>(m)), mode, sp);
    if (!error.empty()) {
      tally.record_invalid(i + 1, std::move(error));
    } else {
      tally.record(i + 1, key);
    }
  }
  return tally.finish();
}

}  // namespace gucycle
