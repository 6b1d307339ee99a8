#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/presentation.hpp"

namespace poincare {

enum class FamilyTag { I1, I2, I3, I4, I5, I6, CI, Stretched, AlmostStretched };

/// "I1".."I6", "CI", "stretched", "almost-stretched".
std::string family_name(FamilyTag tag);
FamilyTag parse_family_tag(const std::string& name);
bool is_h1331_family(FamilyTag tag);

struct FamilySpec {
  FamilyTag tag = FamilyTag::I1;
  std::size_t n = 3;
  /// Constant alpha of I1.
  long alpha = 0;
  /// I_{3-p}: I2 is p = 1, I3 is p = 0. Set from the tag when left at -1.
  int p = -1;
  /// Exponents of the complete intersection.
  std::vector<unsigned> exponents;
  /// Socle degree of the stretched and almost stretched algebras.
  unsigned socle_degree = 3;
  Field field;
};

/// Generators of the normalized H = (1,n,3,1) Gorenstein ideals, of complete
/// intersections and of stretched / almost stretched algebras.
IdealPresentation family_ideal(const FamilySpec& spec);

/// Generators of Ann(F) under the partial-derivative action, found degree by
/// degree up to `degree_bound` and pruned of elements already generated in
/// lower degrees. Characteristic 0 only.
IdealPresentation inverse_system_ideal(const Polynomial& f, std::size_t vars, unsigned degree_bound);

IdealPresentation ci_ideal(const std::vector<unsigned>& exponents);

/// x1^e + x2^2 + ... + xn^2, whose apolar algebra has H = (1,n,1,...,1).
Polynomial stretched_dual(std::size_t n, unsigned socle_degree);
/// x1^e + x2^3 + x3^2 + ... + xn^2, whose apolar algebra has
/// H = (1,n,2,1,...,1).
Polynomial almost_stretched_dual(std::size_t n, unsigned socle_degree);

}  // namespace poincare
