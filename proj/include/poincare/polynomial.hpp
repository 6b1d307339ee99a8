#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/integer.hpp"

namespace poincare {

/// Exponent vector of a monomial in x1..xn.
using Exponents = std::vector<std::uint16_t>;

unsigned total_degree(const Exponents& e);
/// "1", "x1", "x1^2*x3".
std::string format_monomial(const Exponents& e);
/// Degree ascending, then lexicographic with x1 > x2 > ... > xn.
bool local_order_less(const Exponents& a, const Exponents& b);

/// Polynomial with integer coefficients in a fixed number of variables.
class Polynomial {
 public:
  explicit Polynomial(std::size_t vars);

  /// Grammar: terms joined by '+' / '-'; a term is an optional integer
  /// coefficient followed by '*'-separated powers xK^E (K 1-based, E >= 1).
  /// Whitespace is ignored, parentheses are not supported.
  static Polynomial parse(std::string_view text, std::size_t vars);

  std::size_t vars() const noexcept { return vars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }

  void add_term(const Exponents& e, const Integer& c);
  unsigned degree() const;
  unsigned order() const;  // lowest degree of a term

  /// Terms in local order (lowest degree first).
  std::string to_string() const;

 private:
  std::size_t vars_;
  std::map<Exponents, Integer> terms_;
};

}  // namespace poincare
