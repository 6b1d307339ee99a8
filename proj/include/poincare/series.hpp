#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "poincare/integer.hpp"

namespace poincare {

/// Integer polynomial in z, lowest degree first, without trailing zeros.
using IntPolynomial = std::vector<Integer>;

IntPolynomial poly_trim(IntPolynomial p);
IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_scale(const IntPolynomial& a, const Integer& c);
/// a * z^k.
IntPolynomial poly_shift(const IntPolynomial& a, std::size_t k);
/// Primitive gcd over Q with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);
/// a / b when b divides a in Z[z]; nullopt otherwise.
std::optional<IntPolynomial> poly_divexact(const IntPolynomial& a, const IntPolynomial& b);
/// (1+z)^k, (1-z)^k.
IntPolynomial one_plus_z_pow(unsigned k);
IntPolynomial one_minus_z_pow(unsigned k);
/// "1-3*z+z^2".
std::string poly_to_string(const IntPolynomial& p);

/// Coefficients c_0..c_T.
struct TruncatedSeries {
  std::vector<Integer> coefficients;
  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// num/den with den(0) = 1 and gcd(num, den) = 1 over Q.
class RationalFunction {
 public:
  /// Reduces and normalizes; throws InputError when den = 0 or when the
  /// quotient has no normalized integer form.
  RationalFunction(IntPolynomial num, IntPolynomial den);
  static RationalFunction one() { return RationalFunction({Integer(1)}, {Integer(1)}); }

  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }
  std::string to_string() const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

TruncatedSeries expand_rational(const RationalFunction& f, std::size_t order);

/// Normalized num/den with deg num <= num_deg, deg den <= den_deg matching
/// every given coefficient, or nullopt.
std::optional<RationalFunction> fit_rational(const TruncatedSeries& s, std::size_t num_deg, std::size_t den_deg);

enum class TateKind { NonSquare, Square };
/// Multiplies by (1+z) or (1-z^2).
RationalFunction transform_tate(const RationalFunction& p, TateKind kind);

enum class SocleDirection { ToA, FromA };
/// ToA: N/(D + z^2 N), the series of A from that of A/Soc(A). FromA: the
/// inverse N/(D - z^2 N). Needs linear coefficient (embedding dimension)
/// at least 2.
RationalFunction transform_socle(const RationalFunction& p, SocleDirection direction);

/// N/(D - m z N).
RationalFunction transform_golod_socle_vars(const RationalFunction& p, std::size_t m);

/// (1+z)^3/(D0 - (n-3) z (1+z)^3) for a base (1+z)^3/D0 of embedding
/// dimension 3, checked against the literal composition socle FromA, then
/// golod with m = n-3, then socle ToA.
RationalFunction compose_h1331_pipeline(const RationalFunction& base, std::size_t n);

enum class CatalogEntry {
  CompleteIntersection,
  Codim3Gorenstein,
  Codim4Gorenstein,
  StretchedGorenstein,
  H1331Printed,
  H1331Pipeline,
};

struct FormulaParams {
  CatalogEntry entry = CatalogEntry::CompleteIntersection;
  std::size_t n = 0;
  std::size_t epsilon = 0;
  /// Codim-4 structure parameter, used by variant 3.
  std::size_t p = 0;
  /// Codim-4 denominator variant 1..3.
  unsigned variant = 1;
  /// Family index 1..6 for the printed H = (1,n,3,1) forms.
  unsigned t = 1;
  /// Number of generators at n = 3 for the pipeline form; 3 means the
  /// complete-intersection base 1/(1-z)^3.
  std::size_t base_epsilon = 0;
};

RationalFunction catalog_formula(const FormulaParams& params);
/// Short label such as "codim3(eps=5)".
std::string catalog_label(const FormulaParams& params);

}  // namespace poincare
