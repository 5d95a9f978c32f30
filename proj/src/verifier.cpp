#include "gucycle/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "gucycle/errors.hpp"
#include "gucycle/guc_format.hpp"

namespace gucycle {

namespace {

struct WindowOutcome {
  std::string key;
  std::string error;
};

void decode_range(const HostGraph& host, Family family,
                  const FamilyParams& params, int first, int last,
                  std::vector<WindowOutcome>& out) {
  for (int i = first; i <= last; ++i) {
    auto& slot = out[static_cast<std::size_t>(i - 1)];
    try {
      slot.key = object_key(decode(window(host, i), family, params));
    } catch (const NotInFamily& e) {
      slot.error = e.what();
    }
  }
}

}  // namespace

VerificationReport verify(const HostGraph& host, Family family,
                          const FamilyParams& params, unsigned jobs) {
  const auto members = enumerate(family, params);
  std::vector<std::pair<std::string, std::string>> expected;
  expected.reserve(members.size());
  for (const auto& m : members) expected.emplace_back(object_key(m), to_string(m));
  CoverageTally tally(std::move(expected));

  const int n_windows = host.size();
  std::vector<WindowOutcome> outcomes(static_cast<std::size_t>(n_windows));
  jobs = std::clamp(jobs, 1u, static_cast<unsigned>(std::max(1, n_windows)));
  if (jobs == 1) {
    decode_range(host, family, params, 1, n_windows, outcomes);
  } else {
    std::vector<std::thread> workers;
    const int chunk = (n_windows + static_cast<int>(jobs) - 1) / static_cast<int>(jobs);
    for (int first = 1; first <= n_windows; first += chunk) {
      const int last = std::min(n_windows, first + chunk - 1);
      workers.emplace_back(decode_range, std::cref(host), family,
                           std::cref(params), first, last, std::ref(outcomes));
    }
    for (auto& w : workers) w.join();
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      tally.record_invalid(i + 1, std::move(outcomes[i].error));
    } else {
      tally.record(i + 1, outcomes[i].key);
    }
  }
  return tally.finish();
}

VerificationReport verify_file(const std::string& path, unsigned jobs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const auto parsed = parse(text.str());
  return verify(parsed.host, parsed.meta.family, parsed.meta.params, jobs);
}

}  // namespace gucycle
