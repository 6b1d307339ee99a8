#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "poincare/algebra.hpp"
#include "poincare/dense_matrix.hpp"

namespace poincare {

/// Three elements of m whose squares span m^2/m^3.
struct SquareGenerators {
  std::array<AlgebraElement, 3> elements;
  /// Coordinates over the cotangent basis.
  std::array<std::vector<long>, 3> coefficients;
};

struct SquareSearchOptions {
  std::uint64_t seed = 1;
  /// Random trials per generator and coefficient width.
  std::size_t trials = 200;
};

/// Greedy seeded search over small integer combinations of the cotangent
/// basis. The basis elements themselves are tried first. The elements stay
/// independent modulo the radical {v : v m in m^3}. Needs H = (1,n,3,1) and
/// characteristic other than 2 and 3.
SquareGenerators find_square_generators(const LocalAlgebra& a, const SquareSearchOptions& opts = {});

/// The net of conics: relations sum_{i<=j} c_ij a_i a_j in m^3, as symmetric
/// matrices with Q_ii = c_ii and Q_ij = Q_ji = c_ij / 2. The basis is the
/// reduced row echelon form of the relation space in the coordinate order
/// (11, 12, 13, 22, 23, 33).
struct ConicNet {
  std::vector<AlgebraElement> generators;
  std::vector<std::string> generator_names;
  std::vector<DenseMatrix> matrices;
};

ConicNet relation_net(const LocalAlgebra& a, const SquareGenerators& gens);

/// Ternary cubic in l1, l2, l3. Coefficients are in the order
/// l1^3, l1^2 l2, l1^2 l3, l1 l2^2, l1 l2 l3, l1 l3^2, l2^3, l2^2 l3,
/// l2 l3^2, l3^3.
struct TernaryCubic {
  Field field;
  std::array<Scalar, 10> coefficients;

  static const std::array<std::array<unsigned, 3>, 10>& monomials();
  bool is_zero() const;
  std::string to_string() const;
};

enum class DiscriminantClass { IdenticallyZero, NonReduced, Reducible, Irreducible };

/// "identically-zero", "non-reduced", "reducible", "irreducible".
std::string discriminant_class_name(DiscriminantClass c);

/// det(l1 Q1 + l2 Q2 + l3 Q3).
TernaryCubic discriminant(const std::vector<DenseMatrix>& matrices);

/// Linear factors of a nonzero cubic over its field, with multiplicity,
/// each scaled so that its first nonzero coefficient is 1.
std::vector<std::array<Scalar, 3>> linear_factors(const TernaryCubic& f);

DiscriminantClass classify_cubic(const TernaryCubic& f);

struct NetClassification {
  SquareGenerators squares;
  ConicNet net;
  TernaryCubic discriminant;
  DiscriminantClass kind = DiscriminantClass::IdenticallyZero;
};

NetClassification classify_net(const LocalAlgebra& a, const SquareSearchOptions& opts = {});

}  // namespace poincare
