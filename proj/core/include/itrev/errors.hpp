#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itrev {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, world, TPO or file text. `offset` is the 0-based
/// position in the parsed text where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& reason, std::size_t offset)
      : Error(reason + " at offset " + std::to_string(offset)), reason_(reason), offset_(offset) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(const std::string& atom, std::size_t offset)
      : ParseError("unknown atom '" + atom + "'", offset), atom_(atom) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// Cells of a would-be ordered partition are empty, overlapping or do not cover W.
class InvalidPartitionError : public Error {
 public:
  using Error::Error;
};

/// Minimisation over the empty set of worlds.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// Revision, contraction or expansion by an input the operation cannot take.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

/// Revision or expansion applied to the absurd state.
class AbsurdStateError : public Error {
 public:
  using Error::Error;
};

class UnsatisfiableError : public Error {
 public:
  using Error::Error;
};

/// The satisfiers of a conditional set have no unique flattest element.
class NoMaximumError : public Error {
 public:
  using Error::Error;
};

/// Requested atom count or enumeration mode is outside what the operation supports.
class ScopeError : public Error {
 public:
  using Error::Error;
};

class MissingContractionError : public Error {
 public:
  using Error::Error;
};

class MalformedDiagramError : public Error {
 public:
  using Error::Error;
};

}  // namespace itrev
