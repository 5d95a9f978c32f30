#ifndef GUCYCLE_ERRORS_HPP_
#define GUCYCLE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gucycle {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the accepted domain of an operation (bad n, k, q, ...).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Parameters for which the family admits no Gucycle under the window
// definition (e.g. subsets with k in {0, n}, or n = 2 for permutations).
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// A graph or host that violates the structural invariants of its type.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// A window graph that does not decode to any member of the requested family.
class NotInFamily : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DegreeOffender {
  std::string vertex;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
};

// The arc digraph has a vertex whose in-degree differs from its out-degree,
// so no Eulerian circuit (and no universal cycle through it) exists.
class NotBalanced : public Error {
 public:
  explicit NotBalanced(std::vector<DegreeOffender> offenders)
      : Error("arc digraph is not balanced (" +
              std::to_string(offenders.size()) + " offending vertices)"),
        offenders_(std::move(offenders)) {}
  const std::vector<DegreeOffender>& offenders() const noexcept {
    return offenders_;
  }

 private:
  std::vector<DegreeOffender> offenders_;
};

// The arcs of the digraph do not lie in a single weak component.
class NotConnected : public Error {
 public:
  NotConnected() : Error("arc digraph is not weakly connected") {}
};

// Two windows of a window sequence disagree about the same host pair.
class ConflictingWindows : public Error {
 public:
  ConflictingWindows(std::size_t first, std::size_t second, int u, int v)
      : Error("windows " + std::to_string(first) + " and " +
              std::to_string(second) + " disagree on host pair {" +
              std::to_string(u) + "," + std::to_string(v) + "}"),
        first_(first),
        second_(second),
        u_(u),
        v_(v) {}
  std::size_t first_window() const noexcept { return first_; }
  std::size_t second_window() const noexcept { return second_; }
  std::pair<int, int> host_pair() const noexcept { return {u_, v_}; }

 private:
  std::size_t first_, second_;
  int u_, v_;
};

class SequenceTooShort : public Error {
 public:
  using Error::Error;
};

// A builder produced a host that its own verification pass rejected.
class PostconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace gucycle

#endif  // GUCYCLE_ERRORS_HPP_
