#ifndef GUCYCLE_REPORT_HPP_
#define GUCYCLE_REPORT_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gucycle {

struct InvalidWindow {
  std::size_t index = 0;  // 1-based window index
  std::string reason;
};

// Outcome of a coverage check. Lists are truncated to kReportLimit entries;
// the *_total fields hold the untruncated counts.
struct VerificationReport {
  static constexpr std::size_t kReportLimit = 50;

  bool valid = false;
  std::size_t window_count = 0;
  std::size_t expected_count = 0;
  std::vector<std::string> missing;
  std::size_t missing_total = 0;
  std::vector<std::string> duplicated;  // "label (xCOUNT)"
  std::size_t duplicated_total = 0;
  std::vector<InvalidWindow> invalid_windows;
  std::size_t invalid_total = 0;

  // Human-readable multi-line summary; first line is "valid, N windows" or
  // "invalid, N windows (expected M)".
  std::string to_text() const;
};

// Accumulates decoded windows against an expected object space. Keys identify
// objects; labels are what the report prints.
class CoverageTally {
 public:
  explicit CoverageTally(std::vector<std::pair<std::string, std::string>> expected);

  void record(std::size_t index, const std::string& key);
  void record_invalid(std::size_t index, std::string reason);

  VerificationReport finish() const;

 private:
  std::map<std::string, std::string> labels_;
  std::vector<std::string> expected_order_;
  std::map<std::string, std::size_t> seen_;
  std::vector<InvalidWindow> invalid_;
  std::size_t windows_ = 0;
};

}  // namespace gucycle

#endif  // GUCYCLE_REPORT_HPP_
