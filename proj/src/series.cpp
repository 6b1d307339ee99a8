#include "poincare/series.hpp"

#include <algorithm>

#include "poincare/dense_matrix.hpp"
#include "poincare/error.hpp"

namespace poincare {
namespace {

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p) g = Integer::gcd(g, c);
  return g;
}

IntPolynomial primitive(IntPolynomial p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  Integer g = content(p);
  if (p.back().sign() < 0) g = -g;
  for (auto& c : p) c = Integer::divexact(c, g);
  return p;
}

// Pseudo-remainder: a constant multiple of the remainder of a by b.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const Integer& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
    a = primitive(std::move(a));
  }
  return a;
}

Integer binomial2(std::size_t n) { return Integer(static_cast<long>(n * (n - 1) / 2)); }

Integer linear_coefficient(const RationalFunction& p) {
  const TruncatedSeries s = expand_rational(p, 1);
  return s.coefficients[1];
}

Integer to_int(std::size_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

IntPolynomial poly_trim(IntPolynomial p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(out));
}

IntPolynomial poly_scale(const IntPolynomial& a, const Integer& c) {
  IntPolynomial out = a;
  for (auto& x : out) x *= c;
  return poly_trim(std::move(out));
}

IntPolynomial poly_shift(const IntPolynomial& a, std::size_t k) {
  if (a.empty()) return {};
  IntPolynomial out(k, Integer(0));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive(a);
  IntPolynomial y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::optional<IntPolynomial> poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = poly_trim(a);
  const IntPolynomial d = poly_trim(b);
  if (d.empty()) return std::nullopt;
  if (r.empty()) return IntPolynomial{};
  if (r.size() < d.size()) return std::nullopt;
  IntPolynomial q(r.size() - d.size() + 1);
  while (!r.empty() && r.size() >= d.size()) {
    if (!(r.back() % d.back()).is_zero()) return std::nullopt;
    const Integer c = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] -= c * d[i];
    r = poly_trim(std::move(r));
  }
  if (!r.empty()) return std::nullopt;
  return poly_trim(std::move(q));
}

IntPolynomial one_plus_z_pow(unsigned k) {
  IntPolynomial out{Integer(1)};
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, {Integer(1), Integer(1)});
  return out;
}

IntPolynomial one_minus_z_pow(unsigned k) {
  IntPolynomial out{Integer(1)};
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, {Integer(1), Integer(-1)});
  return out;
}

std::string poly_to_string(const IntPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    const Integer a = p[i].abs();
    if (p[i].sign() < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0) {
      out += a.to_string();
      continue;
    }
    if (!a.is_one()) out += a.to_string() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
  num = poly_trim(std::move(num));
  den = poly_trim(std::move(den));
  if (den.empty()) throw InputError("rational function with zero denominator");
  if (num.empty()) {
    den_ = {Integer(1)};
    return;
  }
  const IntPolynomial g = poly_gcd(num, den);
  num = *poly_divexact(num, g);
  den = *poly_divexact(den, g);
  Integer c = Integer::gcd(content(num), content(den));
  if (den.front().is_zero()) throw InputError("rational function is not a power series");
  if (den.front().sign() < 0) c = -c;
  for (auto& x : num) x = Integer::divexact(x, c);
  for (auto& x : den) x = Integer::divexact(x, c);
  if (!den.front().is_one()) throw InputError("rational function has no integer form with den(0) = 1");
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string RationalFunction::to_string() const {
  return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

TruncatedSeries expand_rational(const RationalFunction& f, std::size_t order) {
  TruncatedSeries s;
  s.coefficients.resize(order + 1);
  const auto& num = f.num();
  const auto& den = f.den();
  for (std::size_t t = 0; t <= order; ++t) {
    Integer c = t < num.size() ? num[t] : Integer(0);
    for (std::size_t i = 1; i < den.size() && i <= t; ++i) c -= den[i] * s.coefficients[t - i];
    s.coefficients[t] = std::move(c);
  }
  return s;
}

std::optional<RationalFunction> fit_rational(const TruncatedSeries& s, std::size_t a, std::size_t b) {
  const std::size_t order = s.order();
  if (s.coefficients.empty() || order < a + b + 1) {
    throw InputError("fit needs at least num_deg + den_deg + 2 coefficients");
  }
  const Field q = Field::rationals();
  auto coef = [&](std::ptrdiff_t t) {
    return t < 0 ? Scalar::zero(q) : Scalar(q, s.coefficients[static_cast<std::size_t>(t)]);
  };
  // sum_{i=1..b} d_i s_{t-i} = -s_t for a < t <= T.
  const std::size_t rows = order - a;
  DenseMatrix m(q, rows, b);
  ScalarVector rhs(rows, Scalar::zero(q));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto t = static_cast<std::ptrdiff_t>(a + 1 + r);
    for (std::size_t i = 1; i <= b; ++i) m(r, i - 1) = coef(t - static_cast<std::ptrdiff_t>(i));
    rhs[r] = -coef(t);
  }
  const auto sol = m.solve_linear(rhs);
  if (!sol) return std::nullopt;
  std::vector<Scalar> d{Scalar::one(q)};
  d.insert(d.end(), sol->begin(), sol->end());
  mpz_class scale = 1;
  for (const auto& x : d) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.rational().get_den_mpz_t());
  IntPolynomial den;
  for (const auto& x : d) den.push_back(Integer(mpq_class(x.rational() * scale).get_num()));
  IntPolynomial num(a + 1);
  for (std::size_t t = 0; t <= a; ++t) {
    for (std::size_t i = 0; i <= b && i <= t; ++i) num[t] += den[i] * s.coefficients[t - i];
  }
  try {
    RationalFunction f(std::move(num), std::move(den));
    if (expand_rational(f, order) != s) return std::nullopt;
    return f;
  } catch (const InputError&) {
    return std::nullopt;
  }
}

RationalFunction transform_tate(const RationalFunction& p, TateKind kind) {
  const IntPolynomial factor =
      kind == TateKind::NonSquare ? IntPolynomial{1, 1} : IntPolynomial{Integer(1), Integer(0), Integer(-1)};
  return RationalFunction(poly_mul(p.num(), factor), p.den());
}

RationalFunction transform_socle(const RationalFunction& p, SocleDirection direction) {
  if (linear_coefficient(p) < Integer(2)) {
    throw PreconditionError("the socle transform needs embedding dimension at least 2");
  }
  const IntPolynomial z2n = poly_shift(p.num(), 2);
  return RationalFunction(p.num(),
                          direction == SocleDirection::ToA ? poly_add(p.den(), z2n) : poly_sub(p.den(), z2n));
}

RationalFunction transform_golod_socle_vars(const RationalFunction& p, std::size_t m) {
  return RationalFunction(p.num(), poly_sub(p.den(), poly_scale(poly_shift(p.num(), 1), to_int(m))));
}

RationalFunction compose_h1331_pipeline(const RationalFunction& base, std::size_t n) {
  if (n < 3) throw InputError("the H=(1,n,3,1) pipeline needs n >= 3");
  if (linear_coefficient(base) != Integer(3)) throw InputError("pipeline base must have embedding dimension 3");
  const IntPolynomial cube = one_plus_z_pow(3);
  const auto cofactor = poly_divexact(cube, base.num());
  if (!cofactor) throw InputError("pipeline base numerator must divide (1+z)^3");
  const IntPolynomial d0 = poly_mul(base.den(), *cofactor);
  const RationalFunction closed(cube, poly_sub(d0, poly_scale(poly_shift(cube, 1), to_int(n - 3))));
  const RationalFunction literal =
      transform_socle(transform_golod_socle_vars(transform_socle(base, SocleDirection::FromA), n - 3),
                      SocleDirection::ToA);
  if (!(closed == literal)) {
    throw InternalError("pipeline closed form " + closed.to_string() + " differs from the composition " +
                        literal.to_string());
  }
  return closed;
}

RationalFunction catalog_formula(const FormulaParams& f) {
  const Integer eps = to_int(f.epsilon);
  switch (f.entry) {
    case CatalogEntry::CompleteIntersection:
      if (f.n < 1) throw InputError("complete intersection needs n >= 1");
      return RationalFunction({Integer(1)}, one_minus_z_pow(static_cast<unsigned>(f.n)));
    case CatalogEntry::Codim3Gorenstein:
      if (f.epsilon < 3) throw InputError("codim-3 formula needs eps >= 3");
      return RationalFunction(one_plus_z_pow(3), {1, 0, -eps, -eps, 0, 1});
    case CatalogEntry::Codim4Gorenstein: {
      if (f.epsilon < 4) throw InputError("codim-4 formula needs eps >= 4");
      IntPolynomial d;
      if (f.variant == 1) {
        d = {1, 0, -eps, -(eps * 2 - 2), -eps, 0, 1};
      } else if (f.variant == 2) {
        d = {1, 0, -eps, -(eps * 2 - 5), -(eps - 6), 2, -1, -1};
      } else if (f.variant == 3) {
        if (f.p < 1 || f.p > f.epsilon) throw InputError("codim-4 variant 3 needs 1 <= p <= eps");
        const Integer p = to_int(f.p);
        d = {1, 0, -eps, -(eps * 2 - 2 - p), -(eps - 1 - p * 2), p + 1, 0, -1};
      } else {
        throw InputError("codim-4 variant must be 1, 2 or 3");
      }
      return RationalFunction(one_plus_z_pow(4), d);
    }
    case CatalogEntry::StretchedGorenstein:
      if (f.n < 2) throw InputError("stretched formula needs n >= 2");
      return RationalFunction({Integer(1)}, {1, -to_int(f.n), 1});
    case CatalogEntry::H1331Printed: {
      if (f.n < 3) throw InputError("H=(1,n,3,1) formulas need n >= 3");
      if (f.t < 1 || f.t > 6) throw InputError("family index t must be in 1..6");
      const Integer n = to_int(f.n);
      if (f.t <= 3) return RationalFunction({Integer(1)}, {1, -n, 3, -1});
      const Integer e = binomial2(f.n) + 1;
      return RationalFunction(one_plus_z_pow(3), {1, -(n - 3), -e, -e, 0, 1});
    }
    case CatalogEntry::H1331Pipeline: {
      if (f.base_epsilon < 3) throw InputError("pipeline base needs eps0 >= 3");
      FormulaParams base;
      if (f.base_epsilon == 3) {
        base.entry = CatalogEntry::CompleteIntersection;
        base.n = 3;
      } else {
        base.entry = CatalogEntry::Codim3Gorenstein;
        base.epsilon = f.base_epsilon;
      }
      return compose_h1331_pipeline(catalog_formula(base), f.n);
    }
  }
  throw InputError("unknown catalog entry");
}

std::string catalog_label(const FormulaParams& f) {
  switch (f.entry) {
    case CatalogEntry::CompleteIntersection: return "complete-intersection(n=" + std::to_string(f.n) + ")";
    case CatalogEntry::Codim3Gorenstein: return "codim3(eps=" + std::to_string(f.epsilon) + ")";
    case CatalogEntry::Codim4Gorenstein: {
      std::string s = "codim4-v" + std::to_string(f.variant) + "(eps=" + std::to_string(f.epsilon);
      if (f.variant == 3) s += ",p=" + std::to_string(f.p);
      return s + ")";
    }
    case CatalogEntry::StretchedGorenstein: return "stretched(n=" + std::to_string(f.n) + ")";
    case CatalogEntry::H1331Printed:
      if (f.t <= 3) return "h1331-printed(t<=3,n=" + std::to_string(f.n) + ")";
      return "h1331-printed(t>=4,n=" + std::to_string(f.n) + ",eps=" + (binomial2(f.n) + 1).to_string() + ")";
    case CatalogEntry::H1331Pipeline:
      return "h1331-pipeline(n=" + std::to_string(f.n) + ",eps0=" + std::to_string(f.base_epsilon) + ")";
  }
  return "?";
}

}  // namespace poincare
