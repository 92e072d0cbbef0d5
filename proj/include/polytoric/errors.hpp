#ifndef POLYTORIC_ERRORS_HPP
#define POLYTORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polytoric {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands of mismatched ambient dimension.
struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// Exchange asked to decrement a zero exponent.
struct ZeroExponent : Error {
  explicit ZeroExponent(const std::string& msg) : Error(msg) {}
};

// Exponent arithmetic would wrap.
struct Overflow : Error {
  explicit Overflow(const std::string& msg) : Error(msg) {}
};

// A basis with no elements (construction or empty Veronese range).
struct EmptyBasis : Error {
  explicit EmptyBasis(const std::string& msg) : Error(msg) {}
};

// A fiber enumeration exceeded the configured cap.  Carries the target
// in text form so callers can report which fiber blew up.
struct FiberTooLarge : Error {
  std::string target;
  FiberTooLarge(const std::string& msg, std::string target_text)
      : Error(msg), target(std::move(target_text)) {}
};

// An operation was called outside its stated precondition.
struct PreconditionViolation : Error {
  explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

// Two routes that must agree disagreed; a bug, not a user error.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

// A computation hit its step cap.  Buchberger reports this through its
// result object instead; the exception form is for contexts that cannot.
struct Timeout : Error {
  explicit Timeout(const std::string& msg) : Error(msg) {}
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// h-vector did not stabilize within the requested degree bound.
struct NotStabilized : Error {
  explicit NotStabilized(const std::string& msg) : Error(msg) {}
};

}  // namespace polytoric

#endif
