#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iewds {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed EGT text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A game description that violates the tree invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unknown node id, player id out of range, strategy index out of range, ...
class LookupError : public Error {
 public:
  using Error::Error;
};

// Strategy space larger than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A strategy named in an elimination step has no dominator in the current view.
class NotDominated : public Error {
 public:
  NotDominated(int player, std::size_t index, const std::string& rendered)
      : Error("strategy " + rendered + " of player " + std::to_string(player) +
              " is not weakly dominated in the current view"),
        player_(player),
        index_(index) {}
  int player() const { return player_; }
  std::size_t index() const { return index_; }

 private:
  int player_;
  std::size_t index_;
};

// A non-final step of an elimination sequence produced an empty view.
class IntermediateEmpty : public Error {
 public:
  explicit IntermediateEmpty(std::size_t step)
      : Error("step " + std::to_string(step) + " empties the view before the end of the sequence"),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// An operation was called outside its precondition (non-trivial child view, wrong player count, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The constructive solver refuses games that are not SPE-invariant.
class NotInvariant : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace iewds
