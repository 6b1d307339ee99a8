#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// An ideal I of k[x1..xn], given by generators, standing for the local
/// Artinian algebra S/I. Generators keep their source text; `polynomials()`
/// parses and validates them.
struct IdealPresentation {
  std::size_t vars = 1;
  Field field = Field::rationals();
  /// Work modulo m^N; when absent the default max-degree + 3 is used.
  std::optional<std::size_t> truncation;
  std::vector<std::string> generators;

  /// Parses every generator. Throws ParseError on bad syntax and
  /// PreconditionError when a generator has a constant or linear term.
  std::vector<Polynomial> polynomials() const;

  /// Checks vars/truncation/generators; throws InputError subclasses.
  void validate() const;

  /// Truncation actually used: the explicit one or max-degree + 3.
  std::size_t effective_truncation() const;
};

}  // namespace poincare
