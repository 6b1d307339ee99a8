#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace poincare {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed matrices, mixed fields, dimension mismatches,
/// out-of-range parameters. The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A polynomial or JSON document that does not follow the input grammar.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// The truncated ring k[x]/m^N was too small to represent the quotient.
class TruncationTooSmall : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was applied outside its domain (wrong Hilbert function,
/// forbidden characteristic, ...).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A randomized search ran out of trials.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The resolution hit its matrix-size budget. The Betti numbers computed so
/// far are exact and are carried along.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::vector<std::uint64_t> partial)
      : Error(what), partial_(std::move(partial)) {}

  const std::vector<std::uint64_t>& partial_betti() const noexcept { return partial_; }

 private:
  std::vector<std::uint64_t> partial_;
};

}  // namespace poincare
