#ifndef GUCYCLE_CLI_HPP_
#define GUCYCLE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gucycle {

// One row of the built-in reference-vector table (--seed-figures).
struct VectorCheck {
  std::string name;
  bool passed = false;
  bool diagnostic = false;  // reported, but does not affect the exit code
  std::string detail;
};

std::vector<VectorCheck> run_reference_vectors();

// Entry point of the gucycle tool. Exit codes: 0 success, 1 validity failure,
// 2 usage or parameter error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gucycle

#endif  // GUCYCLE_CLI_HPP_
