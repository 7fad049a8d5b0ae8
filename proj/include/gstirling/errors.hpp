#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstirling {

// Raised by parse_word; `position` is the 1-based offset of the offending
// character (for prefix violations, the position where D's first outnumber x's).
struct WordParseError : std::runtime_error {
  enum class Kind { BadCharacter, Unbalanced, PrefixViolation };

  Kind kind;
  std::size_t position;

  WordParseError(Kind k, std::size_t pos, const std::string& msg)
      : std::runtime_error(msg), kind(k), position(pos) {}
};

// Carries one connected component with no universal vertex as a witness.
struct NotQuasiThreshold : std::runtime_error {
  std::vector<int> witness;

  explicit NotQuasiThreshold(std::vector<int> component);
};

// A resource cap (profile-dependent) was exceeded.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by k! left a remainder: the input was not a chromatic polynomial.
struct NonIntegralResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySequence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDistribution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically impossible state was observed; indicates a bug.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gstirling
