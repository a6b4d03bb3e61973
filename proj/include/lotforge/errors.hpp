#pragma once

#include <stdexcept>
#include <string>

namespace lotforge {

/// Malformed input file or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed at runtime. Always a bug, never an input problem.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive oracle was asked to enumerate beyond its size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cutting-plane loop hit its round cap.
class RoundLimitError : public std::runtime_error {
 public:
  explicit RoundLimitError(int rounds)
      : std::runtime_error("round limit reached after " + std::to_string(rounds) + " rounds"),
        rounds(rounds) {}

  int rounds;
};

#define LOTFORGE_ENSURE(cond, msg)                                   \
  do {                                                               \
    if (!(cond)) throw ::lotforge::InvariantError(std::string(msg)); \
  } while (0)

}  // namespace lotforge
