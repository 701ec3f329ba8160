#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eacc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters or an invalid code specification. constraint() names
// the violated rule with a stable identifier used by the CLI and tests.
class ValidationError : public Error {
 public:
  ValidationError(std::string constraint, const std::string& message)
      : Error(message + " [" + constraint + "]"), constraint_(std::move(constraint)) {}

  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// The erasure system is underdetermined: more than one message fits the
// unerased symbols.
struct AmbiguousDecoding : Error {
  using Error::Error;
};

// No polynomial of the allowed degree is consistent with the unerased
// symbols; the word was corrupted beyond the declared erasure model.
struct InconsistentWord : Error {
  using Error::Error;
};

// Bounded-distance search found no acceptable codeword within the radius,
// or found several at the same distance.
struct DecodingFailure : Error {
  using Error::Error;
};

// The estimated work exceeds the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace eacc
