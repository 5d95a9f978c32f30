#include "gucycle/guc_format.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "gucycle/errors.hpp"

namespace gucycle {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

long long to_int(std::string_view word, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(word) + "'");
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line without its terminator; throws at end of input.
  std::string_view next() {
    if (pos_ >= text_.size()) {
      throw ParseError(line_ + 1, "unexpected end of input");
    }
    const std::size_t end = text_.find('\n', pos_);
    const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
    std::string_view line = text_.substr(pos_, stop - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;
    return line;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string_view> expect_keyword(LineReader& in,
                                             std::string_view keyword,
                                             std::size_t arity) {
  const auto words = split_words(in.next());
  if (words.empty() || words[0] != keyword) {
    throw ParseError(in.line(), "expected '" + std::string(keyword) + "' line");
  }
  if (arity != 0 && words.size() != arity + 1) {
    throw ParseError(in.line(), "'" + std::string(keyword) + "' takes " +
                                    std::to_string(arity) + " value(s)");
  }
  return words;
}

}  // namespace

std::string serialize(const HostGraph& host, const FamilyDescriptor& meta) {
  std::ostringstream out;
  out << "guc 1\n";
  out << "family " << family_name(meta.family) << '\n';
  out << "params n=" << meta.params.n;
  if (family_uses_k(meta.family)) out << " k=" << meta.params.k;
  out << '\n';
  out << "N " << host.size() << '\n';
  out << "w " << host.window() << '\n';
  for (const Edge& e : host.edges()) {
    out << "e " << e.a << ' ' << e.b << ' ' << e.multiplicity << '\n';
  }
  out << "end\n";
  return out.str();
}

ParsedHost parse(std::string_view text) {
  LineReader in(text);

  auto header = expect_keyword(in, "guc", 1);
  if (header[1] != "1") {
    throw ParseError(in.line(),
                     "unsupported GUC version '" + std::string(header[1]) + "'");
  }

  FamilyDescriptor meta;
  auto family_line = expect_keyword(in, "family", 1);
  auto family = family_from_name(family_line[1]);
  if (!family) {
    throw ParseError(in.line(),
                     "unknown family '" + std::string(family_line[1]) + "'");
  }
  meta.family = *family;

  auto params_line = expect_keyword(in, "params", 0);
  std::map<std::string, long long> params;
  for (std::size_t i = 1; i < params_line.size(); ++i) {
    const auto word = params_line[i];
    const auto eq = word.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(in.line(), "parameter '" + std::string(word) +
                                      "' is not key=value");
    }
    std::string key(word.substr(0, eq));
    if (key != "n" && !(key == "k" && family_uses_k(meta.family))) {
      throw ParseError(in.line(), "unexpected parameter '" + key + "'");
    }
    if (!params.emplace(key, to_int(word.substr(eq + 1), in.line(), "parameter"))
             .second) {
      throw ParseError(in.line(), "parameter '" + key + "' given twice");
    }
  }
  if (params.count("n") == 0 ||
      (family_uses_k(meta.family) && params.count("k") == 0)) {
    throw ParseError(in.line(), "missing parameter");
  }
  meta.params.n = static_cast<int>(params["n"]);
  meta.params.k = family_uses_k(meta.family) ? static_cast<int>(params["k"]) : 0;
  try {
    validate_params(meta.family, meta.params);
  } catch (const InvalidParameters& e) {
    throw ParseError(in.line(), e.what());
  }

  const long long size = to_int(expect_keyword(in, "N", 1)[1], in.line(), "N");
  if (size < 1 || size > (1 << 30)) {
    throw ParseError(in.line(), "host size out of range");
  }
  const long long window = to_int(expect_keyword(in, "w", 1)[1], in.line(), "w");
  if (window < 2 || window > size) {
    throw ParseError(in.line(), "window size must lie in [2, N]");
  }
  const bool simple = meta.family != Family::multisets;

  // Validated here line by line so errors can name the offending line; the
  // HostGraph constructor repeats the structural checks.
  HostGraph probe(static_cast<int>(size), static_cast<int>(window), simple);
  std::map<HostGraph::PairKey, std::uint32_t> edges;
  for (;;) {
    const auto words = split_words(in.next());
    if (words.size() == 1 && words[0] == "end") break;
    if (words.size() != 4 || words[0] != "e") {
      throw ParseError(in.line(), "expected 'e <a> <b> <mult>' or 'end'");
    }
    const long long a = to_int(words[1], in.line(), "endpoint");
    const long long b = to_int(words[2], in.line(), "endpoint");
    const long long m = to_int(words[3], in.line(), "multiplicity");
    if (a >= b) throw ParseError(in.line(), "edge endpoints must satisfy a < b");
    if (a < 1 || b > size) {
      throw ParseError(in.line(), "edge endpoint outside [1, N]");
    }
    if (probe.cyclic_distance(static_cast<int>(a), static_cast<int>(b)) >
        window - 1) {
      throw ParseError(in.line(),
                       "edge {" + std::to_string(a) + "," + std::to_string(b) +
                           "} has cyclic distance beyond window size - 1");
    }
    if (m < 1 || m > 0xffffffffLL) {
      throw ParseError(in.line(), "edge multiplicity must be positive");
    }
    if (simple && m != 1) {
      throw ParseError(in.line(), "family " +
                                      std::string(family_name(meta.family)) +
                                      " requires a simple host");
    }
    if (!edges.emplace(HostGraph::PairKey{static_cast<int>(a), static_cast<int>(b)},
                      static_cast<std::uint32_t>(m))
             .second) {
      throw ParseError(in.line(), "duplicate edge {" + std::to_string(a) + "," +
                                      std::to_string(b) + "}");
    }
  }
  while (!in.at_end()) {
    if (!split_words(in.next()).empty()) {
      throw ParseError(in.line(), "content after 'end'");
    }
  }

  return {HostGraph(static_cast<int>(size), static_cast<int>(window), simple,
                    std::move(edges)),
          meta};
}

}  // namespace gucycle
