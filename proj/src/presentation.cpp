#include "poincare/presentation.hpp"

#include <algorithm>

#include "poincare/error.hpp"

namespace poincare {

std::vector<Polynomial> IdealPresentation::polynomials() const {
  if (vars < 1) throw InputError("an ideal presentation needs at least one variable");
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    Polynomial p = Polynomial::parse(g, vars);
    for (const auto& [e, c] : p.terms()) {
      if (total_degree(e) < 2) {
        throw PreconditionError("generator '" + g + "' is not contained in the square of the maximal ideal");
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

void IdealPresentation::validate() const {
  (void)polynomials();
  if (truncation && *truncation < 2) throw InputError("truncation must be at least 2");
}

std::size_t IdealPresentation::effective_truncation() const {
  if (truncation) return *truncation;
  unsigned d = 0;
  for (const auto& p : polynomials()) d = std::max(d, p.degree());
  return std::max<std::size_t>(d + 3, 2);
}

}  // namespace poincare
