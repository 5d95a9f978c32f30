#ifndef GUCYCLE_STRING_UCYCLES_HPP_
#define GUCYCLE_STRING_UCYCLES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gucycle/arc_digraph.hpp"
#include "gucycle/report.hpp"

namespace gucycle {

// A word over the alphabet [0, q-1], read cyclically.
class CyclicWord {
 public:
  CyclicWord(std::vector<int> symbols, int q);

  const std::vector<int>& symbols() const noexcept { return symbols_; }
  int alphabet() const noexcept { return q_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  // The length-m window starting at 0-based position i, wrapping around.
  std::vector<int> window(std::size_t i, std::size_t m) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<int> symbols_;
  int q_;
};

// How a window of a cyclic string is read as an object.
enum class DecodeMode {
  exact_word,        // the window itself, a q-ary word with weight in [s, t]
  window_multiset,   // multiset of the window's symbols, drawn from [lo, hi]
  binary_subset,     // positions of the 1s: a subset of [m] of size in [s, t]
  weight_vector,     // symbol j = multiplicity of j: multiset of [m], size in [s, t]
  order_iso,         // relative order of distinct symbols: a permutation of [m]
  letter_partition,  // positions grouped by equal symbols: a partition of [m]
};

std::string_view mode_name(DecodeMode mode) noexcept;
std::optional<DecodeMode> mode_from_name(std::string_view name) noexcept;

// Object-space parameters for verify_string. Unset fields take defaults from
// the word: q = max(2, largest symbol + 1), s = 0, t = m(q-1) (or m for
// binary_subset), lo/hi = smallest/largest symbol present.
struct StringSpace {
  std::optional<int> q;
  std::optional<int> min_weight;
  std::optional<int> max_weight;
  std::optional<int> lo;
  std::optional<int> hi;
};

// Text <-> word. letter_partition maps letters to symbols in order of first
// appearance (case-sensitive); every other mode reads 0-9 then a-z as values
// 0..35.
CyclicWord word_from_text(std::string_view text, DecodeMode mode);
std::string word_to_text(const CyclicWord& word);

// Arc digraph on (m-1)-words: arc v -> shift(v)a carries the m-word va for
// every symbol a with s <= weight(v) + a <= t. Payload is the m-word.
ArcDigraph<std::vector<int>> weight_range_digraph(int m, int q, int s, int t);

// Cyclic word whose m-windows are the q-ary m-words with weight in [s, t],
// each exactly once. Throws NotConnected / NotBalanced when the digraph
// admits no Eulerian circuit, InvalidParameters on a bad range.
CyclicWord build_weight_range(int m, int q, int s, int t);

// Decodes every length-m window of the word under mode and checks coverage of
// the object space. Windows longer than the word wrap around it repeatedly.
VerificationReport verify_string(const CyclicWord& word, int m, DecodeMode mode,
                                 const StringSpace& space = {});

}  // namespace gucycle

#endif  // GUCYCLE_STRING_UCYCLES_HPP_
