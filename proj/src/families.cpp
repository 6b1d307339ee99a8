#include "poincare/families.hpp"

#include <algorithm>
#include <map>

#include "poincare/algebra.hpp"
#include "poincare/dense_matrix.hpp"
#include "poincare/echelon.hpp"
#include "poincare/error.hpp"

namespace poincare {
namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i); }

// x_i*x_j for 1 <= i < j <= n and j >= min_j, grouped by j.
void append_products(std::vector<std::string>& out, std::size_t n, std::size_t min_j) {
  for (std::size_t j = std::max<std::size_t>(min_j, 2); j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) out.push_back(var(i) + "*" + var(j));
  }
}

void append_squares(std::vector<std::string>& out, std::size_t n, const std::string& rhs) {
  for (std::size_t h = 4; h <= n; ++h) out.push_back(var(h) + "^2-" + rhs);
}

std::string alpha_quadric(long alpha) {
  std::string s = "x1^2+x2^2";
  if (alpha == 0) return s;
  const long a = alpha < 0 ? -alpha : alpha;
  s += alpha > 0 ? "-" : "+";
  if (a != 1) s += std::to_string(a) + "*";
  return s + "x3^2";
}

void check_h1331_spec(const FamilySpec& spec) {
  if (spec.n < 3) throw InputError(family_name(spec.tag) + " needs n >= 3");
  const auto c = spec.field.characteristic();
  if (c == 2 || c == 3) throw PreconditionError("characteristic 2 and 3 are excluded for the H=(1,n,3,1) families");
}

std::vector<Exponents> monomials_up_to(std::size_t vars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents e(vars, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned remaining) -> void {
    if (v == vars) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[v] = static_cast<std::uint16_t>(k);
      self(self, v + 1, remaining - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), local_order_less);
  return out;
}

// d^m F with the ordinary partial-derivative action.
std::map<Exponents, Integer> contract(const Polynomial& f, const Exponents& m) {
  std::map<Exponents, Integer> out;
  for (const auto& [a, c] : f.terms()) {
    Exponents r(a.size());
    Integer coef = c;
    bool ok = true;
    for (std::size_t v = 0; v < a.size() && ok; ++v) {
      if (a[v] < m[v]) {
        ok = false;
        break;
      }
      for (unsigned k = 0; k < m[v]; ++k) coef *= Integer(static_cast<long>(a[v] - k));
      r[v] = static_cast<std::uint16_t>(a[v] - m[v]);
    }
    if (!ok) continue;
    auto [it, fresh] = out.try_emplace(r, coef);
    if (!fresh) it->second += coef;
  }
  return out;
}

Polynomial to_polynomial(const ScalarVector& v, const std::vector<Exponents>& monomials, std::size_t vars) {
  mpz_class den = 1;
  for (const auto& s : v) {
    if (!s.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
  }
  Integer g = 0;
  std::vector<Integer> coef(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const mpq_class q = v[i].rational() * den;
    coef[i] = Integer(q.get_num());
    g = Integer::gcd(g, coef[i]);
  }
  Polynomial p(vars);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!coef[i].is_zero()) p.add_term(monomials[i], Integer::divexact(coef[i], g));
  }
  return p;
}

}  // namespace

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::I1: return "I1";
    case FamilyTag::I2: return "I2";
    case FamilyTag::I3: return "I3";
    case FamilyTag::I4: return "I4";
    case FamilyTag::I5: return "I5";
    case FamilyTag::I6: return "I6";
    case FamilyTag::CI: return "CI";
    case FamilyTag::Stretched: return "stretched";
    case FamilyTag::AlmostStretched: return "almost-stretched";
  }
  return "?";
}

FamilyTag parse_family_tag(const std::string& name) {
  for (FamilyTag t : {FamilyTag::I1, FamilyTag::I2, FamilyTag::I3, FamilyTag::I4, FamilyTag::I5, FamilyTag::I6,
                      FamilyTag::CI, FamilyTag::Stretched, FamilyTag::AlmostStretched}) {
    if (family_name(t) == name) return t;
  }
  throw InputError("unknown family '" + name + "'");
}

bool is_h1331_family(FamilyTag tag) {
  return tag != FamilyTag::CI && tag != FamilyTag::Stretched && tag != FamilyTag::AlmostStretched;
}

Polynomial stretched_dual(std::size_t n, unsigned e) {
  if (n < 1 || e < 2) throw InputError("stretched dual needs n >= 1 and socle degree >= 2");
  Polynomial f(n);
  Exponents x(n, 0);
  x[0] = static_cast<std::uint16_t>(e);
  f.add_term(x, 1);
  for (std::size_t i = 1; i < n; ++i) {
    Exponents y(n, 0);
    y[i] = 2;
    f.add_term(y, 1);
  }
  return f;
}

Polynomial almost_stretched_dual(std::size_t n, unsigned e) {
  if (n < 2 || e < 3) throw InputError("almost stretched dual needs n >= 2 and socle degree >= 3");
  Polynomial f(n);
  Exponents x(n, 0);
  x[0] = static_cast<std::uint16_t>(e);
  f.add_term(x, 1);
  Exponents c(n, 0);
  c[1] = 3;
  f.add_term(c, 1);
  for (std::size_t i = 2; i < n; ++i) {
    Exponents y(n, 0);
    y[i] = 2;
    f.add_term(y, 1);
  }
  return f;
}

IdealPresentation ci_ideal(const std::vector<unsigned>& exponents) {
  if (exponents.empty()) throw InputError("a complete intersection needs at least one exponent");
  IdealPresentation p;
  p.vars = exponents.size();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 2) throw InputError("complete intersection exponents must be at least 2");
    p.generators.push_back(var(i + 1) + "^" + std::to_string(exponents[i]));
  }
  return p;
}

IdealPresentation inverse_system_ideal(const Polynomial& f, std::size_t vars, unsigned degree_bound) {
  if (f.is_zero()) throw InputError("the dual polynomial is zero");
  if (f.vars() != vars) throw InputError("dual polynomial has the wrong number of variables");
  const unsigned e = f.degree();
  if (degree_bound < e + 1) throw InputError("degree bound must exceed the degree of the dual polynomial");

  const std::vector<Exponents> all = monomials_up_to(vars, degree_bound);
  const std::vector<Exponents> targets = monomials_up_to(vars, e);
  std::map<Exponents, std::size_t> target_index;
  for (std::size_t i = 0; i < targets.size(); ++i) target_index.emplace(targets[i], i);
  std::map<Exponents, std::size_t> all_index;
  for (std::size_t i = 0; i < all.size(); ++i) all_index.emplace(all[i], i);

  const Field q = Field::rationals();
  Echelon<IntegerDomain> generated(IntegerDomain{}, all.size());
  std::vector<Polynomial> chosen;

  auto as_vector = [&](const Polynomial& p) {
    SparseVector<Integer> v;
    for (const auto& [m, c] : p.terms()) v.push_back({static_cast<std::uint32_t>(all_index.at(m)), c});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    return v;
  };

  for (unsigned d = 1; d <= degree_bound; ++d) {
    std::vector<Exponents> cols;
    for (const auto& m : all) {
      if (total_degree(m) <= d) cols.push_back(m);
    }
    // Catalecticant: column m holds the coordinates of d^m F.
    DenseMatrix cat(q, targets.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& [r, c] : contract(f, cols[j])) {
        if (!c.is_zero()) cat(target_index.at(r), j) = Scalar(q, c);
      }
    }
    // Multiples of earlier generators that stay within degree d.
    for (const auto& g : chosen) {
      const unsigned dg = g.degree();
      for (const auto& m : all) {
        const unsigned dm = total_degree(m);
        if (dm == 0 || dm + dg > d) continue;
        Polynomial mg(vars);
        for (const auto& [a, c] : g.terms()) {
          Exponents s(vars);
          for (std::size_t v = 0; v < vars; ++v) s[v] = static_cast<std::uint16_t>(a[v] + m[v]);
          mg.add_term(s, c);
        }
        generated.insert(as_vector(mg));
      }
    }
    for (const auto& k : cat.nullspace_basis()) {
      Polynomial g = to_polynomial(k, cols, vars);
      if (d == 1) throw PreconditionError("the dual polynomial is annihilated by a linear form");
      if (generated.insert(as_vector(g))) chosen.push_back(std::move(g));
    }
  }

  IdealPresentation p;
  p.vars = vars;
  for (const auto& g : chosen) p.generators.push_back(g.to_string());
  IdealPresentation minimal = p;
  minimal.generators.clear();
  for (std::size_t i : minimal_generator_subset(p)) minimal.generators.push_back(p.generators[i]);
  return minimal;
}

IdealPresentation family_ideal(const FamilySpec& spec) {
  IdealPresentation p;
  p.field = spec.field;
  std::vector<std::string>& g = p.generators;
  const std::size_t n = spec.n;
  switch (spec.tag) {
    case FamilyTag::I1:
      check_h1331_spec(spec);
      g = {"x1*x2+x3^2", "x1*x3", alpha_quadric(spec.alpha)};
      append_products(g, n, 4);
      append_squares(g, n, "x1^3");
      break;
    case FamilyTag::I2:
    case FamilyTag::I3: {
      check_h1331_spec(spec);
      const int pp = spec.p >= 0 ? spec.p : (spec.tag == FamilyTag::I2 ? 1 : 0);
      if (pp != 0 && pp != 1) throw InputError("p must be 0 or 1");
      if ((spec.tag == FamilyTag::I2) != (pp == 1)) throw InputError("I2 is p = 1 and I3 is p = 0");
      g = {"x1^2", "x2^2", pp == 1 ? "x3^2+2*x1*x2" : "x3^2"};
      append_products(g, n, 4);
      append_squares(g, n, "x1*x2*x3");
      break;
    }
    case FamilyTag::I4:
      check_h1331_spec(spec);
      g = {"x2^3-x1^3", "x3^3-x1^3"};
      append_products(g, n, 2);
      append_squares(g, n, "x1^3");
      break;
    case FamilyTag::I5:
      check_h1331_spec(spec);
      g = {"x1^2", "x1*x2", "x2*x3", "x2^3-x3^3", "x1*x3^2-x3^3"};
      append_products(g, n, 4);
      append_squares(g, n, "x3^3");
      break;
    case FamilyTag::I6:
      check_h1331_spec(spec);
      g = {"x1^2", "x1*x2", "2*x1*x3+x2^2", "x3^3", "x2*x3^2"};
      append_products(g, n, 4);
      append_squares(g, n, "x1*x3^2");
      break;
    case FamilyTag::CI: {
      std::vector<unsigned> e = spec.exponents;
      if (e.empty()) e.assign(n, 2);
      IdealPresentation ci = ci_ideal(e);
      ci.field = spec.field;
      return ci;
    }
    case FamilyTag::Stretched:
    case FamilyTag::AlmostStretched: {
      const Polynomial f = spec.tag == FamilyTag::Stretched ? stretched_dual(n, spec.socle_degree)
                                                            : almost_stretched_dual(n, spec.socle_degree);
      IdealPresentation inv = inverse_system_ideal(f, n, f.degree() + 1);
      inv.field = spec.field;
      return inv;
    }
  }
  p.vars = n;
  return p;
}

}  // namespace poincare
