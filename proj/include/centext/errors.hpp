#pragma once

#include <stdexcept>
#include <string>

namespace centext {

/// Malformed input: files, law strings, CLI arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold by construction was violated.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw AssertionFailure(what);
}

}  // namespace centext
