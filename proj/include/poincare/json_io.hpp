#pragma once

#include <string>

#include "json.hpp"

#include "poincare/algebra.hpp"
#include "poincare/integer.hpp"
#include "poincare/netconics.hpp"
#include "poincare/presentation.hpp"
#include "poincare/resolution.hpp"
#include "poincare/series.hpp"

namespace poincare {

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_to_json(const Integer& v);
/// Accepts JSON integers and decimal integer strings.
Integer integer_from_json(const Json& j);
/// Integers as numbers, other rationals as "a/b" strings.
Json scalar_to_json(const Scalar& s);

/// {"vars", "char", "truncation"?, "generators"}.
Json presentation_to_json(const IdealPresentation& p);
/// Throws ParseError on malformed documents; runs IdealPresentation::validate.
IdealPresentation presentation_from_json(const Json& j);
IdealPresentation presentation_from_text(const std::string& text);
/// Throws InputError when the file cannot be read.
IdealPresentation load_presentation(const std::string& path);

/// {"field", "betti", "steps", "minimal"}.
Json betti_to_json(const BettiResult& r);
/// {"num", "den"}.
Json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);
Json invariants_to_json(const LocalAlgebra& a, const AlgebraInvariants& inv, std::size_t minimal_generators);
/// {"generators", "net", "discriminant", "class"}.
Json netclass_to_json(const NetClassification& c);

}  // namespace poincare
