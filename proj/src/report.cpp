#include "gucycle/report.hpp"

#include <algorithm>
#include <sstream>

namespace gucycle {

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  if (valid) {
    out << "valid, " << window_count << " windows\n";
    return out.str();
  }
  out << "invalid, " << window_count << " windows (expected " << expected_count
      << ")\n";
  auto list = [&out](const char* title, std::size_t total, const auto& items,
                     auto&& show) {
    if (total == 0) return;
    out << "  " << title << " (" << total << "):";
    for (const auto& item : items) out << ' ' << show(item);
    if (total > items.size()) out << " ... (" << total - items.size() << " more)";
    out << '\n';
  };
  auto plain = [](const std::string& s) { return s; };
  list("missing", missing_total, missing, plain);
  list("duplicated", duplicated_total, duplicated, plain);
  if (invalid_total != 0) {
    out << "  invalid windows (" << invalid_total << "):\n";
    for (const auto& w : invalid_windows) {
      out << "    window " << w.index << ": " << w.reason << '\n';
    }
    if (invalid_total > invalid_windows.size()) {
      out << "    ... (" << invalid_total - invalid_windows.size()
          << " more)\n";
    }
  }
  return out.str();
}

CoverageTally::CoverageTally(
    std::vector<std::pair<std::string, std::string>> expected) {
  expected_order_.reserve(expected.size());
  for (auto& [key, label] : expected) {
    if (labels_.emplace(key, std::move(label)).second) {
      expected_order_.push_back(key);
    }
  }
}

void CoverageTally::record(std::size_t index, const std::string& key) {
  ++windows_;
  if (labels_.count(key) == 0) {
    invalid_.push_back({index, "decodes to an object outside the family"});
    return;
  }
  ++seen_[key];
}

void CoverageTally::record_invalid(std::size_t index, std::string reason) {
  ++windows_;
  invalid_.push_back({index, std::move(reason)});
}

VerificationReport CoverageTally::finish() const {
  VerificationReport r;
  r.window_count = windows_;
  r.expected_count = expected_order_.size();

  for (const auto& key : expected_order_) {
    auto it = seen_.find(key);
    if (it == seen_.end()) {
      if (r.missing.size() < VerificationReport::kReportLimit) {
        r.missing.push_back(labels_.at(key));
      }
      ++r.missing_total;
    } else if (it->second > 1) {
      if (r.duplicated.size() < VerificationReport::kReportLimit) {
        r.duplicated.push_back(labels_.at(key) + " (x" +
                               std::to_string(it->second) + ")");
      }
      ++r.duplicated_total;
    }
  }

  auto invalid = invalid_;
  std::sort(invalid.begin(), invalid.end(),
            [](const InvalidWindow& a, const InvalidWindow& b) {
              return a.index < b.index;
            });
  r.invalid_total = invalid.size();
  if (invalid.size() > VerificationReport::kReportLimit) {
    invalid.resize(VerificationReport::kReportLimit);
  }
  r.invalid_windows = std::move(invalid);

  r.valid = r.missing_total == 0 && r.duplicated_total == 0 &&
            r.invalid_total == 0 && r.window_count == r.expected_count;
  return r;
}

}  // namespace gucycle
