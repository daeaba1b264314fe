#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mesostab {

/// Raised when an exhaustive operation is asked to run on a dimension
/// above its configured limit.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& operation, std::size_t n, std::size_t limit)
      : std::runtime_error(operation + ": dimension " + std::to_string(n) +
                           " exceeds N_max = " + std::to_string(limit) +
                           " (override with --nmax)"),
        n_(n),
        limit_(limit) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// Malformed input file. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mesostab
