#pragma once

#include <stdexcept>
#include <string>

namespace esz {

// Machine-readable error classes. The CLI maps them onto exit codes:
//   InputError   -> 2 (malformed or precondition-violating input)
//   InternalError-> 3 (an invariant the underlying results promise never fails)
// Everything else (verification failures) is reported through return values.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// Never expected on valid inputs; carries a full trace for bug reports.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline InputError vertical_pair_error() {
  return InputError("VerticalPair", "slope undefined: points share an x-coordinate");
}

inline InputError size_guard_error(int size, int guard) {
  return InputError("SizeGuard", "input size " + std::to_string(size) +
                                     " exceeds the exhaustive-search guard " +
                                     std::to_string(guard));
}

inline InputError domain_error(const std::string& what) {
  return InputError("DomainError", what);
}

}  // namespace esz
