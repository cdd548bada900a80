#pragma once

#include <stdexcept>
#include <string>

namespace beldef {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Formula or knowledge-base text that does not conform to the grammar.
/// `position` is a 0-based character offset into the offending text;
/// `line` is 1-based when the source is a file, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position(position), line(line) {}
  std::size_t position;
  std::size_t line;
};

/// Registering more atoms than the vocabulary admits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A default base with no tolerance stratification.
class InconsistentBaseError : public Error {
 public:
  using Error::Error;
};

/// Dempster combination of totally conflicting assignments, or
/// conditioning on a zero-plausibility event.
class DegenerateMassError : public Error {
 public:
  using Error::Error;
};

/// Order comparison asked over an empty cone of degree assignments.
class InfeasibleSystemError : public Error {
 public:
  using Error::Error;
};

/// Constraint compilation or class-partition solving failed.
class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace beldef
