#pragma once

#include <stdexcept>
#include <string>

namespace bottcert {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid (series, rank) combination or malformed marking.
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// A weight failed a dominance precondition.
class DominanceError : public Error {
public:
  using Error::Error;
};

/// Binary character operation across different symmetry contexts.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// Non-exact division, negative multiplicity, or a failed integrity check:
/// the input was not a genuine character, or upstream state is corrupt.
class CorruptCharacter : public Error {
public:
  using Error::Error;
};

/// A configured resource cap (wall time or distinct-weight count) was hit.
/// Raised eagerly; results are never silently truncated.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Bad command-line usage or configuration.
class UsageError : public Error {
public:
  using Error::Error;
};

} // namespace bottcert
