#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the range an operation accepts.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (empty set, invalid
/// peak set, missing vertex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two label or vertex sets that must be disjoint overlap.
class NotDisjoint : public Error {
 public:
  using Error::Error;
};

/// Rotation of the empty permutation was requested.
class EmptyPermutation : public Error {
 public:
  using Error::Error;
};

/// Flip at a vertex that is neither a source nor a sink.
class IllegalFlip : public Error {
 public:
  using Error::Error;
};

/// A digraph handed to Dag contains a directed cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// A quasi-symmetric function does not lie in the cyclic subring.
class NotCyclic : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `position` is a character offset when
/// one is meaningful, otherwise -1.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long position = -1)
      : Error(position < 0 ? what : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  long position() const noexcept { return position_; }

 private:
  long position_;
};

/// Two computations that must agree did not. Signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
