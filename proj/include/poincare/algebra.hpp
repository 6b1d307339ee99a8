#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "poincare/dense_matrix.hpp"
#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/presentation.hpp"

namespace poincare {

/// Coordinates of an algebra element in LocalAlgebra::basis().
using AlgebraElement = std::vector<Scalar>;

/// A finite-dimensional local algebra A = S/I with an explicit k-basis of
/// representative monomials. The basis is sorted by filtration degree and
/// its first element is the unit. For every t the basis elements of
/// filtration >= t span m^t.
class LocalAlgebra {
 public:
  Field field() const noexcept { return field_; }
  /// Number of ambient variables x1..xn.
  std::size_t vars() const noexcept { return vars_; }
  std::size_t length() const noexcept { return basis_.size(); }
  /// Truncation N the algebra was built with (0 for derived algebras).
  std::size_t truncation() const noexcept { return truncation_; }

  const std::vector<Exponents>& basis() const noexcept { return basis_; }
  const std::vector<int>& filtration() const noexcept { return filtration_; }
  /// Largest t with the element in m^t; INT_MAX for zero.
  int filtration_of(const AlgebraElement& a) const;

  const AlgebraElement& product(std::size_t i, std::size_t j) const { return table_[i * length() + j]; }
  /// Image of x_{l+1}.
  const AlgebraElement& variable(std::size_t l) const { return variables_[l]; }
  /// Basis indices of filtration 1; their classes are a basis of m/m^2.
  std::vector<std::size_t> cotangent_basis() const;

  AlgebraElement zero() const;
  AlgebraElement unit() const { return basis_element(0); }
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement evaluate(const Polynomial& p) const;
  /// Polynomial-style rendering in the representative monomials.
  std::string format(const AlgebraElement& a) const;

  /// Builds an algebra from a complete multiplication table; used for
  /// quotients. Products are given as dense coordinate vectors.
  static LocalAlgebra from_table(Field field, std::size_t vars, std::vector<Exponents> basis,
                                 std::vector<int> filtration, std::vector<AlgebraElement> table,
                                 std::vector<AlgebraElement> variables, std::size_t truncation);

 private:
  Field field_;
  std::size_t vars_ = 0;
  std::size_t truncation_ = 0;
  std::vector<Exponents> basis_;
  std::vector<int> filtration_;
  std::vector<AlgebraElement> table_;
  std::vector<AlgebraElement> variables_;
};

struct AlgebraInvariants {
  std::size_t length = 0;
  std::vector<std::size_t> hilbert;
  std::size_t emdim = 0;
  std::size_t level = 0;
  bool gorenstein = false;
  std::vector<AlgebraElement> socle;
  std::size_t multiplicity = 0;
};

/// A = k[x]/(I + m^N) through linear algebra in the truncated ring, with the
/// truncation validated by rebuilding at N+1. Throws TruncationTooSmall when
/// the two disagree.
LocalAlgebra build_quotient_algebra(const IdealPresentation& p);

AlgebraInvariants algebra_invariants(const LocalAlgebra& a);

/// Minimal number of generators of I, computed as dim I/mI in a truncated
/// ring deep enough that m^N lies in mI.
std::size_t minimal_generator_count(const IdealPresentation& p);
/// Indices of a subset of the generators that generates I minimally; the
/// earliest generators are preferred.
std::vector<std::size_t> minimal_generator_subset(const IdealPresentation& p);

/// A / J for a k-subspace J that is an ideal of A.
LocalAlgebra quotient_by_ideal(const LocalAlgebra& a, const std::vector<AlgebraElement>& ideal);

/// A / Soc(A).
LocalAlgebra quotient_by_socle(const LocalAlgebra& a);

/// Exhaustive check of commutativity, associativity, unit and filtration
/// compatibility of the multiplication table.
bool check_structure(const LocalAlgebra& a);

}  // namespace poincare
