#include "poincare/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "poincare/error.hpp"

namespace poincare {
namespace {

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json integer_list(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(integer_to_json(c));
  if (p.empty()) out.push_back(0);
  return out;
}

IntPolynomial integer_list_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  IntPolynomial out;
  for (const auto& v : j.at(key)) out.push_back(integer_from_json(v));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_int64()) return Json(v.to_int64());
  return Json(v.to_string());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(std::string("bad integer: ") + e.what());
    }
  }
  throw ParseError("expected an integer or a decimal integer string");
}

Json scalar_to_json(const Scalar& s) {
  if (!s.field().is_rational()) return Json(static_cast<long long>(s.residue()));
  if (s.is_integral()) return integer_to_json(Integer(mpz_class(s.rational().get_num())));
  return Json(s.to_string());
}

Json presentation_to_json(const IdealPresentation& p) {
  Json j;
  j["vars"] = p.vars;
  j["char"] = p.field.characteristic();
  if (p.truncation) j["truncation"] = *p.truncation;
  j["generators"] = p.generators;
  return j;
}

IdealPresentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("presentation must be a JSON object");
  static const std::set<std::string> keys{"vars", "char", "truncation", "generators"};
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw ParseError("unknown presentation key \"" + k + "\"");
  }
  for (const char* k : {"vars", "char", "generators"}) {
    if (!j.contains(k)) throw ParseError(std::string("missing \"") + k + "\"");
  }
  IdealPresentation p;
  p.vars = size_field(j, "vars");
  p.field = Field::of_characteristic(size_field(j, "char"));
  if (j.contains("truncation")) p.truncation = size_field(j, "truncation");
  const Json& g = j.at("generators");
  if (!g.is_array()) throw ParseError("\"generators\" must be an array of strings");
  for (const auto& s : g) {
    if (!s.is_string()) throw ParseError("\"generators\" must be an array of strings");
    p.generators.push_back(s.get<std::string>());
  }
  p.validate();
  return p;
}

IdealPresentation presentation_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

IdealPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return presentation_from_text(buf.str());
}

Json betti_to_json(const BettiResult& r) {
  Json j;
  j["field"] = r.field.name();
  j["betti"] = r.betti;
  j["steps"] = r.steps;
  j["minimal"] = r.minimal;
  return j;
}

Json rational_to_json(const RationalFunction& f) {
  Json j;
  j["num"] = integer_list(f.num());
  j["den"] = integer_list(f.den());
  return j;
}

RationalFunction rational_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("rational function must be a JSON object");
  return RationalFunction(integer_list_from_json(j, "num"), integer_list_from_json(j, "den"));
}

Json invariants_to_json(const LocalAlgebra& a, const AlgebraInvariants& inv, std::size_t minimal_generators) {
  Json j;
  j["field"] = a.field().name();
  j["length"] = inv.length;
  j["hilbert"] = inv.hilbert;
  j["emdim"] = inv.emdim;
  j["level"] = inv.level;
  j["gorenstein"] = inv.gorenstein;
  Json socle = Json::array();
  for (const auto& s : inv.socle) socle.push_back(a.format(s));
  j["socle"] = socle;
  j["multiplicity"] = inv.multiplicity;
  j["minimal_generators"] = minimal_generators;
  return j;
}

Json netclass_to_json(const NetClassification& c) {
  Json j;
  j["generators"] = c.net.generator_names;
  Json net = Json::array();
  for (const auto& q : c.net.matrices) {
    Json m = Json::array();
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t s = 0; s < 3; ++s) m.push_back(scalar_to_json(q(r, s)));
    }
    net.push_back(m);
  }
  j["net"] = net;
  Json d = Json::array();
  for (const auto& x : c.discriminant.coefficients) d.push_back(scalar_to_json(x));
  j["discriminant"] = d;
  j["class"] = discriminant_class_name(c.kind);
  return j;
}

}  // namespace poincare
