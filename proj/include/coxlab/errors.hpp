#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

// Exit-code contract of the command line tool:
//   0 success, 1 invalid input, 2 reduced expression required,
//   3 resource budget exceeded, 4 internal invariant failure.

class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReducedError : public std::runtime_error {
 public:
  NotReducedError() : std::runtime_error("reduced expression required") {}
  explicit NotReducedError(const std::string& what) : std::runtime_error(what) {}
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact computation contradicts a structural invariant
// (sign-incoherent root, failed certificate). Always a bug, never user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotBiconvexError : public InvalidInputError {
 public:
  explicit NotBiconvexError(const std::string& what) : InvalidInputError("not biconvex: " + what) {}
};

class NotStandardError : public InvalidInputError {
 public:
  explicit NotStandardError(const std::string& what)
      : InvalidInputError("not a standard labeling: " + what) {}
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotReducedError*>(&e)) return 2;
  if (dynamic_cast<const ResourceError*>(&e)) return 3;
  if (dynamic_cast<const InternalError*>(&e)) return 4;
  if (dynamic_cast<const InvalidInputError*>(&e)) return 1;
  return 4;
}

}  // namespace coxlab
