#include "gucycle/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gucycle/builders.hpp"
#include "gucycle/errors.hpp"
#include "gucycle/families.hpp"
#include "gucycle/guc_format.hpp"
#include "gucycle/string_ucycles.hpp"
#include "gucycle/verifier.hpp"

namespace gucycle {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

// Raised for bad command-line values that CLI11 itself cannot catch.
struct UsageError : Error {
  using Error::Error;
};

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

FamilyParams family_params(Family family, std::optional<int> n,
                           std::optional<int> k) {
  if (!n) throw UsageError("--n is required");
  if (family_uses_k(family) && !k) {
    throw UsageError("--k is required for family " +
                     std::string(family_name(family)));
  }
  return {*n, family_uses_k(family) ? *k : 0};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
  if (!file) throw UsageError("error writing '" + path + "'");
}

std::string dot_dump(const HostGraph& host) {
  std::ostringstream out;
  out << "graph gucycle {\n";
  for (int v = 1; v <= host.size(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : host.edges()) {
    out << "  " << e.a << " -- " << e.b;
    if (e.multiplicity != 1) out << " [label=" << e.multiplicity << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

StringSpace parse_string_space(const std::vector<std::string>& items) {
  StringSpace space;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--params entry '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("--params value '" + text + "' is not an integer");
    }
    if (key == "q") {
      space.q = value;
    } else if (key == "s" || key == "min") {
      space.min_weight = value;
    } else if (key == "t" || key == "max") {
      space.max_weight = value;
    } else if (key == "lo") {
      space.lo = value;
    } else if (key == "hi") {
      space.hi = value;
    } else {
      throw UsageError("unknown --params key '" + key + "'");
    }
  }
  return space;
}

VectorCheck string_check(std::string name, const std::string& text, int m,
                         DecodeMode mode, StringSpace space,
                         std::size_t expected_windows, bool diagnostic = false) {
  VectorCheck row{std::move(name), false, diagnostic, {}};
  const auto report = verify_string(word_from_text(text, mode), m, mode, space);
  row.passed = report.valid && report.window_count == expected_windows;
  row.detail = std::string(mode_name(mode)) + ", " +
               std::to_string(report.window_count) + " windows" +
               (report.valid ? "" : ", invalid");
  return row;
}

VectorCheck host_check(std::string name, const HostGraph& host, Family family,
                       FamilyParams params, std::size_t expected_windows) {
  VectorCheck row{std::move(name), false, false, {}};
  const auto report = verify(host, family, params);
  row.passed = report.valid && report.window_count == expected_windows;
  row.detail = "N = " + std::to_string(host.size()) +
               (report.valid ? ", valid" : ", invalid");
  return row;
}

WindowSequence encoded_sequence(Family family, int n,
                                const std::vector<std::string>& words) {
  std::vector<LabeledGraph> windows;
  for (const auto& w : words) {
    std::vector<int> image;
    for (char c : w) image.push_back(c - '0');
    if (family == Family::permutations) {
      windows.push_back(encode(Permutation(image)));
    } else {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i) {
        if (image[i - 1] > i) pairs.emplace_back(i, image[i - 1]);
      }
      windows.push_back(encode(Involution(n, pairs)));
    }
  }
  return WindowSequence(std::move(windows));
}

template <typename Fn>
VectorCheck guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, false, std::string("error: ") + e.what()};
  }
}

int seed_figures(std::ostream& out) {
  const auto rows = run_reference_vectors();
  bool ok = true;
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    const char* status = r.passed ? "PASS" : (r.diagnostic ? "DIAG" : "FAIL");
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name
        << status << "  " << r.detail << '\n';
    if (!r.passed && !r.diagnostic) ok = false;
  }
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

std::vector<VectorCheck> run_reference_vectors() {
  std::vector<VectorCheck> rows;
  auto add = [&rows](const std::string& name, auto&& fn) {
    rows.push_back(guarded(name, fn));
  };
  auto weights = [](int q, int s, int t) {
    StringSpace sp;
    sp.q = q;
    sp.min_weight = s;
    sp.max_weight = t;
    return sp;
  };

  add("2-multisets of {1,2,3}: 112233", [&] {
    return string_check("2-multisets of {1,2,3}: 112233", "112233", 2,
                        DecodeMode::window_multiset, {}, 6);
  });
  add("binary triples: 11101000", [&] {
    return string_check("binary triples: 11101000", "11101000", 3,
                        DecodeMode::exact_word, {}, 8);
  });
  add("2- and 3-subsets of [4]: 1110011010", [&] {
    return string_check("2- and 3-subsets of [4]: 1110011010", "1110011010", 4,
                        DecodeMode::binary_subset, weights(2, 2, 3), 10);
  });
  add("order-isomorphic S_3: 124324", [&] {
    return string_check("order-isomorphic S_3: 124324", "124324", 3,
                        DecodeMode::order_iso, {}, 6);
  });
  add("partitions of [4]: abcbccccddcdeec", [&] {
    return string_check("partitions of [4]: abcbccccddcdeec", "abcbccccddcdeec",
                        4, DecodeMode::letter_partition, {}, 15);
  });
  add("0..2-multisets of {1,2,3}: 0011010020", [&] {
    return string_check("0..2-multisets of {1,2,3}: 0011010020", "0011010020",
                        3, DecodeMode::weight_vector, weights(3, 0, 2), 10);
  });
  add("partitions of [5]: 52-letter string", [&] {
    return string_check("partitions of [5]: 52-letter string",
                        "DDDDDCHHHCCDDCCCHCHCSHHSDSSDSSHSDDCH"
                        "SSCHSHDHSCHSJCDC",
                        5, DecodeMode::letter_partition, {}, 52,
                        /*diagnostic=*/true);
  });
  add("Gucycle of 2-subsets of [6]", [&] {
    return host_check("Gucycle of 2-subsets of [6]",
                      build_gucycle(Family::subsets, {6, 2}), Family::subsets,
                      {6, 2}, 15);
  });
  add("3-subsets of [5] from backbone 1110011010", [&] {
    const auto backbone =
        word_from_text("1110011010", DecodeMode::exact_word);
    const auto host = host_from_window_sequence(
        subset_windows_from_backbone(backbone, 5, 3));
    return host_check("3-subsets of [5] from backbone 1110011010", host,
                      Family::subsets, {5, 3}, 10);
  });
  add("2-multisets of [4] from backbone 0011010020", [&] {
    const auto backbone =
        CyclicWord(word_from_text("0011010020", DecodeMode::exact_word).symbols(), 3);
    const auto host = host_from_window_sequence(
        multiset_windows_from_backbone(backbone, 4, 2));
    return host_check("2-multisets of [4] from backbone 0011010020", host,
                      Family::multisets, {4, 2}, 10);
  });
  add("S_3 in order 321 231 312 213 123 132", [&] {
    const auto host = host_from_window_sequence(encoded_sequence(
        Family::permutations, 3, {"321", "231", "312", "213", "123", "132"}));
    return host_check("S_3 in order 321 231 312 213 123 132", host,
                      Family::permutations, {3, 0}, 6);
  });
  add("Gucycle of S_4", [&] {
    return host_check("Gucycle of S_4", build_gucycle(Family::permutations, {4, 0}),
                      Family::permutations, {4, 0}, 24);
  });
  add("involutions of [4] in listed order", [&] {
    const auto host = host_from_window_sequence(encoded_sequence(
        Family::involutions, 4,
        {"1324", "2143", "4321", "2134", "4231", "1432", "3412", "3214", "1234",
         "1243"}));
    return host_check("involutions of [4] in listed order", host,
                      Family::involutions, {4, 0}, 10);
  });
  add("arc digraph of partitions of [3]", [] {
    const auto d = build_arc_digraph(Family::partitions, 3);
    VectorCheck row{"arc digraph of partitions of [3]", false, false, {}};
    row.passed = d.vertex_count() == 2 && d.arc_count() == 5 && d.is_balanced() &&
                 d.is_weakly_connected();
    row.detail = std::to_string(d.vertex_count()) + " vertices, " +
                 std::to_string(d.arc_count()) + " arcs";
    return row;
  });
  add("Gucycle of partitions of [4]", [&] {
    return host_check("Gucycle of partitions of [4]",
                      build_gucycle(Family::partitions, {4, 0}),
                      Family::partitions, {4, 0}, 15);
  });
  return rows;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Graph universal cycles: build, verify and enumerate", "gucycle"};
  app.require_subcommand(0, 1);

  bool seed = false;
  app.add_flag("--seed-figures", seed,
               "Run the built-in reference vectors and print a pass/fail table");

  std::string family_text;
  std::optional<int> n_opt, k_opt;
  std::string output_path;
  bool emit_windows = false, dot = false, quiet = false;
  unsigned jobs = 1;

  auto* build = app.add_subcommand("build", "Build a Gucycle and write it as GUC v1");
  build->add_option("--family", family_text, "Family name")->required();
  build->add_option("--n", n_opt, "Window size / ground-set size");
  build->add_option("--k", k_opt, "Subset or multiset size");
  build->add_option("-o,--output", output_path, "Output file");
  build->add_flag("--emit-windows", emit_windows,
                  "Print each window's decoded object in cycle order");
  build->add_flag("--dot", dot, "Print the host as a DOT edge list");
  build->add_option("--jobs", jobs, "Verification threads")->check(CLI::PositiveNumber);

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a GUC v1 file");
  verify_cmd->add_option("file", verify_path, "GUC v1 file")->required();
  verify_cmd->add_flag("--quiet", quiet, "Suppress the report");
  verify_cmd->add_option("--jobs", jobs, "Verification threads")
      ->check(CLI::PositiveNumber);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family, one object per line");
  enumerate_cmd->add_option("--family", family_text, "Family name")->required();
  enumerate_cmd->add_option("--n", n_opt, "Ground-set size");
  enumerate_cmd->add_option("--k", k_opt, "Subset or multiset size");

  int length = 0, alphabet = 0, min_weight = 0, max_weight = 0;
  auto* string_cmd = app.add_subcommand(
      "string", "Cyclic word covering all words with weight in [min, max]");
  string_cmd->add_option("--length", length, "Window length M")->required();
  string_cmd->add_option("--alphabet", alphabet, "Alphabet size Q")->required();
  string_cmd->add_option("--min", min_weight, "Minimum weight S")->required();
  string_cmd->add_option("--max", max_weight, "Maximum weight T")->required();
  string_cmd->add_option("-o,--output", output_path, "Output file");

  std::string word_text, mode_text;
  int window_length = 0;
  std::vector<std::string> space_items;
  auto* string_verify = app.add_subcommand(
      "string-verify", "Check that a cyclic string is a universal cycle");
  string_verify->add_option("--word", word_text, "Cyclic word")->required();
  string_verify->add_option("--window", window_length, "Window length")->required();
  string_verify->add_option("--mode", mode_text,
                            "exact_word | window_multiset | binary_subset | "
                            "weight_vector | order_iso | letter_partition")
      ->required();
  string_verify->add_option("--params", space_items,
                            "Object space: q=, s=, t=, lo=, hi=");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (seed) return seed_figures(out);

    if (*build) {
      const Family family = parse_family(family_text);
      const FamilyParams params = family_params(family, n_opt, k_opt);
      const HostGraph host = build_gucycle(family, params);
      const std::string text = serialize(host, {family, params});
      if (!output_path.empty()) {
        write_file(output_path, text);
      } else if (!emit_windows && !dot) {
        out << text;
      }
      if (emit_windows) {
        for (int i = 1; i <= host.size(); ++i) {
          out << to_string(decode(window(host, i), family, params)) << '\n';
        }
      }
      if (dot) out << dot_dump(host);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto report = verify_file(verify_path, jobs);
      if (!quiet) out << report.to_text();
      return report.valid ? kExitOk : kExitInvalid;
    }

    if (*enumerate_cmd) {
      const Family family = parse_family(family_text);
      for (const auto& object :
           enumerate(family, family_params(family, n_opt, k_opt))) {
        out << to_string(object) << '\n';
      }
      return kExitOk;
    }

    if (*string_cmd) {
      const auto word = build_weight_range(length, alphabet, min_weight, max_weight);
      const std::string text = word_to_text(word) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        write_file(output_path, text);
      }
      return kExitOk;
    }

    if (*string_verify) {
      auto mode = mode_from_name(mode_text);
      if (!mode) throw UsageError("unknown mode '" + mode_text + "'");
      const auto word = word_from_text(word_text, *mode);
      const auto report =
          verify_string(word, window_length, *mode, parse_string_space(space_items));
      out << report.to_text();
      return report.valid ? kExitOk : kExitInvalid;
    }

    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateParameters& e) {
    err << "error: degenerate parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameters& e) {
    err << "error: invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << verify_path << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace gucycle
