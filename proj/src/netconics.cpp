#include "poincare/netconics.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "poincare/error.hpp"

namespace poincare {
namespace {

using Mono = std::array<unsigned, 3>;
using Line = std::array<Scalar, 3>;

// Homogeneous polynomial in l1, l2, l3.
struct HomPoly {
  Field field;
  std::map<Mono, Scalar> terms;

  void add(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  unsigned degree() const {
    if (terms.empty()) return 0;
    const Mono& m = terms.begin()->first;
    return m[0] + m[1] + m[2];
  }
};

HomPoly multiply(const HomPoly& a, const HomPoly& b) {
  HomPoly out{a.field, {}};
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) out.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  }
  return out;
}

std::optional<HomPoly> divide_by_linear(HomPoly f, const Line& l) {
  std::size_t j = 0;
  while (l[j].is_zero()) ++j;
  const Scalar lead_inv = l[j].inverse();
  HomPoly q{f.field, {}};
  for (;;) {
    // Term with the highest power of l_j.
    auto best = f.terms.end();
    for (auto it = f.terms.begin(); it != f.terms.end(); ++it) {
      if (it->first[j] > 0 && (best == f.terms.end() || it->first[j] > best->first[j])) best = it;
    }
    if (best == f.terms.end()) break;
    Mono m = best->first;
    --m[j];
    const Scalar c = best->second * lead_inv;
    q.add(m, c);
    for (std::size_t k = 0; k < 3; ++k) {
      Mono mk = m;
      ++mk[k];
      f.add(mk, -(c * l[k]));
    }
  }
  if (!f.is_zero()) return std::nullopt;
  return q;
}

Line normalize_line(Line l) {
  std::size_t j = 0;
  while (j < 3 && l[j].is_zero()) ++j;
  if (j == 3) return l;
  const Scalar inv = l[j].inverse();
  for (auto& c : l) c *= inv;
  return l;
}

Line cross(const Line& p, const Line& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

bool is_zero_line(const Line& l) { return l[0].is_zero() && l[1].is_zero() && l[2].is_zero(); }

// -- Rational roots of integer polynomials of degree <= 3 ------------------

int sign_of(const mpz_class& v) { return sgn(v); }

mpz_class eval(const std::vector<mpz_class>& c, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

void integer_roots_monotone(const std::vector<mpz_class>& g, mpz_class lo, mpz_class hi, std::vector<mpz_class>& out) {
  if (lo > hi) return;
  mpz_class glo = eval(g, lo);
  const mpz_class ghi = eval(g, hi);
  if (glo == 0) out.push_back(lo);
  if (ghi == 0) out.push_back(hi);
  if (glo == 0 || ghi == 0 || sign_of(glo) == sign_of(ghi)) return;
  while (hi - lo > 1) {
    const mpz_class mid = (lo + hi) / 2;
    const mpz_class gm = eval(g, mid);
    if (gm == 0) {
      out.push_back(mid);
      return;
    }
    if (sign_of(gm) == sign_of(glo)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
}

// Integer roots of a monic cubic with nonzero constant term.
std::vector<mpz_class> monic_cubic_integer_roots(const std::vector<mpz_class>& g) {
  mpz_class bound = 1;
  for (std::size_t i = 0; i < 3; ++i) bound = std::max(bound, mpz_class(abs(g[i]) + 1));
  std::vector<mpz_class> out;
  const mpz_class disc = 4 * g[2] * g[2] - 12 * g[1];
  if (disc < 0) {
    integer_roots_monotone(g, -bound, bound, out);
  } else {
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
    mpz_class c1 = -2 * g[2] - sq;
    mpz_class c2 = -2 * g[2] + sq;
    mpz_fdiv_q_ui(c1.get_mpz_t(), c1.get_mpz_t(), 6);
    mpz_fdiv_q_ui(c2.get_mpz_t(), c2.get_mpz_t(), 6);
    for (const mpz_class& c : {c1, c2}) {
      for (mpz_class s = c - 3; s <= c + 3; ++s) {
        if (eval(g, s) == 0) out.push_back(s);
      }
    }
    integer_roots_monotone(g, -bound, c1 - 4, out);
    integer_roots_monotone(g, c1 + 4, c2 - 4, out);
    integer_roots_monotone(g, c2 + 4, bound, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<mpq_class> integer_poly_rational_roots(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<mpq_class> out;
  if (c.size() <= 1) return out;
  if (c[0] == 0) {
    out.emplace_back(0);
    while (c[0] == 0) c.erase(c.begin());
  }
  if (c.size() == 1) {
  } else if (c.size() == 2) {
    out.emplace_back(-c[0], c[1]);
  } else if (c.size() == 3) {
    const mpz_class disc = c[1] * c[1] - 4 * c[2] * c[0];
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      mpz_class sq;
      mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
      out.emplace_back(-c[1] + sq, 2 * c[2]);
      out.emplace_back(-c[1] - sq, 2 * c[2]);
    }
  } else if (c.size() == 4) {
    // t = s / a3 turns a3^2 f(t) into a monic integer cubic in s.
    const mpz_class& a3 = c[3];
    const std::vector<mpz_class> g{c[0] * a3 * a3, c[1] * a3, c[2], 1};
    for (const auto& s : monic_cubic_integer_roots(g)) out.emplace_back(s, a3);
  } else {
    throw InternalError("root search above degree 3");
  }
  for (auto& r : out) r.canonicalize();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// -- Roots modulo p ---------------------------------------------------------

using ModPoly = std::vector<std::uint64_t>;

struct ModArith {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static ModPoly trim(ModPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }
  // Remainder and quotient of a by b.
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    a = trim(std::move(a));
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    const std::uint64_t li = inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t c = mul(a.back(), li);
      const std::size_t shift = a.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mul(c, b[i])) % p;
      a = trim(std::move(a));
      if (a.empty()) break;
    }
    return {trim(std::move(q)), a};
  }
  ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    }
    return divmod(std::move(r), m).second;
  }
  ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m) const {
    ModPoly r{1};
    base = divmod(std::move(base), m).second;
    for (; e; e >>= 1, base = mulmod(base, base, m)) {
      if (e & 1) r = mulmod(r, base, m);
    }
    return r;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
      ModPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
  ModPoly sub(ModPoly a, const ModPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return trim(std::move(a));
  }

  // Roots of a squarefree product of distinct linear factors.
  void split(const ModPoly& g, std::vector<std::uint64_t>& out) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back(mul(p - g[0], inv(g[1])));
      return;
    }
    for (std::uint64_t a = 0; a < p; ++a) {
      ModPoly w = sub(powmod({a, 1}, (p - 1) / 2, g), {1});
      ModPoly d = gcd(g, w);
      if (d.size() > 1 && d.size() < g.size()) {
        split(d, out);
        split(divmod(g, d).first, out);
        return;
      }
    }
    throw InternalError("root splitting did not terminate");
  }

  std::vector<std::uint64_t> roots(ModPoly f) const {
    f = trim(std::move(f));
    std::vector<std::uint64_t> out;
    if (f.size() <= 1) return out;
    if (p < 4096) {
      for (std::uint64_t t = 0; t < p; ++t) {
        std::uint64_t v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = (mul(v, t) + *it) % p;
        if (v == 0) out.push_back(t);
      }
      return out;
    }
    const ModPoly xp = powmod({0, 1}, p, f);
    const ModPoly g = gcd(f, sub(xp, {0, 1}));
    split(g, out);
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<Scalar> univariate_roots(Field field, const std::vector<Scalar>& c) {
  std::vector<Scalar> out;
  if (field.is_rational()) {
    mpz_class scale = 1;
    for (const auto& x : c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : c) ints.push_back(mpq_class(x.rational() * scale).get_num());
    for (const auto& r : integer_poly_rational_roots(ints)) out.emplace_back(field, r);
  } else {
    const ModArith m{field.characteristic()};
    ModPoly f;
    for (const auto& x : c) f.push_back(x.residue());
    for (auto r : m.roots(f)) out.emplace_back(field, Integer(static_cast<long>(r)));
  }
  return out;
}

// Points of f = 0 on the line l_k = 0, for f not divisible by l_k.
std::vector<Line> points_on_coordinate_line(const HomPoly& f, std::size_t k) {
  const std::size_t i = (k + 1) % 3 < (k + 2) % 3 ? (k + 1) % 3 : (k + 2) % 3;
  const std::size_t j = 3 - k - i;
  const unsigned d = f.degree();
  std::vector<Scalar> c(d + 1, Scalar::zero(f.field));
  for (const auto& [m, v] : f.terms) {
    if (m[k] == 0) c[m[i]] += v;
  }
  std::vector<Line> out;
  const Scalar zero = Scalar::zero(f.field);
  const Scalar one = Scalar::one(f.field);
  for (const auto& t : univariate_roots(f.field, c)) {
    Line pt{zero, zero, zero};
    pt[i] = t;
    pt[j] = one;
    out.push_back(pt);
  }
  if (c[d].is_zero()) {
    Line pt{zero, zero, zero};
    pt[i] = one;
    out.push_back(pt);
  }
  return out;
}

void collect_linear_factors(HomPoly f, std::vector<Line>& out) {
  if (f.is_zero() || f.degree() == 0) return;
  const Scalar zero = Scalar::zero(f.field);
  const Scalar one = Scalar::one(f.field);
  for (std::size_t k = 0; k < 3; ++k) {
    Line l{zero, zero, zero};
    l[k] = one;
    if (auto q = divide_by_linear(f, l)) {
      out.push_back(l);
      collect_linear_factors(std::move(*q), out);
      return;
    }
  }
  // Every line component meets the three coordinate lines, which are not
  // concurrent, in at least two distinct points.
  std::array<std::vector<Line>, 3> pts;
  for (std::size_t k = 0; k < 3; ++k) pts[k] = points_on_coordinate_line(f, k);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      for (const auto& p : pts[a]) {
        for (const auto& q : pts[b]) {
          Line l = cross(p, q);
          if (is_zero_line(l)) continue;
          l = normalize_line(l);
          if (auto quot = divide_by_linear(f, l)) {
            out.push_back(l);
            collect_linear_factors(std::move(*quot), out);
            return;
          }
        }
      }
    }
  }
}

HomPoly to_hompoly(const TernaryCubic& f) {
  HomPoly p{f.field, {}};
  for (std::size_t i = 0; i < 10; ++i) p.add(TernaryCubic::monomials()[i], f.coefficients[i]);
  return p;
}

std::vector<std::size_t> indices_of_filtration(const LocalAlgebra& a, int t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.filtration()[i] == t) out.push_back(i);
  }
  return out;
}

std::vector<Scalar> project(const AlgebraElement& x, const std::vector<std::size_t>& idx) {
  std::vector<Scalar> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(x[i]);
  return out;
}

std::size_t rank_of(Field f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  DenseMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m.rank();
}

}  // namespace

const std::array<Mono, 10>& TernaryCubic::monomials() {
  static const std::array<Mono, 10> m{{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                       {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};
  return m;
}

bool TernaryCubic::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::string TernaryCubic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 10; ++i) {
    const Scalar& c = coefficients[i];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    const bool negative = field.is_rational() && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    out += negative ? "-" : (out.empty() ? "" : "+");
    std::string mono;
    for (std::size_t k = 0; k < 3; ++k) {
      const unsigned e = monomials()[i][k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "l" + std::to_string(k + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    out += coef == "1" ? mono : coef + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

std::string discriminant_class_name(DiscriminantClass c) {
  switch (c) {
    case DiscriminantClass::IdenticallyZero: return "identically-zero";
    case DiscriminantClass::NonReduced: return "non-reduced";
    case DiscriminantClass::Reducible: return "reducible";
    case DiscriminantClass::Irreducible: return "irreducible";
  }
  return "?";
}

TernaryCubic discriminant(const std::vector<DenseMatrix>& q) {
  if (q.size() != 3) throw InputError("a net needs exactly three matrices");
  const Field f = q[0].field();
  for (const auto& m : q) {
    if (m.rows() != 3 || m.cols() != 3 || !(m.field() == f)) throw InputError("net matrices must be 3x3 over one field");
  }
  auto entry = [&](std::size_t r, std::size_t c) {
    HomPoly p{f, {}};
    for (std::size_t k = 0; k < 3; ++k) {
      Mono m{0, 0, 0};
      m[k] = 1;
      p.add(m, q[k](r, c));
    }
    return p;
  };
  static const std::array<std::array<std::size_t, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                                 {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  HomPoly det{f, {}};
  for (std::size_t s = 0; s < 6; ++s) {
    const auto& pi = perms[s];
    HomPoly term = multiply(multiply(entry(0, pi[0]), entry(1, pi[1])), entry(2, pi[2]));
    const Scalar sign(f, s < 3 ? 1L : -1L);
    for (const auto& [m, c] : term.terms) det.add(m, sign * c);
  }
  TernaryCubic out{f, {}};
  for (std::size_t i = 0; i < 10; ++i) {
    auto it = det.terms.find(TernaryCubic::monomials()[i]);
    out.coefficients[i] = it == det.terms.end() ? Scalar::zero(f) : it->second;
  }
  return out;
}

std::vector<Line> linear_factors(const TernaryCubic& f) {
  if (f.is_zero()) throw InputError("the zero cubic has no factorization");
  std::vector<Line> out;
  collect_linear_factors(to_hompoly(f), out);
  return out;
}

DiscriminantClass classify_cubic(const TernaryCubic& f) {
  if (f.is_zero()) return DiscriminantClass::IdenticallyZero;
  const auto lines = linear_factors(f);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) return DiscriminantClass::NonReduced;
    }
  }
  return lines.empty() ? DiscriminantClass::Irreducible : DiscriminantClass::Reducible;
}

SquareGenerators find_square_generators(const LocalAlgebra& a, const SquareSearchOptions& opts) {
  const Field f = a.field();
  if (f.characteristic() == 2 || f.characteristic() == 3) {
    throw PreconditionError("square generators need characteristic other than 2 and 3");
  }
  const AlgebraInvariants inv = algebra_invariants(a);
  if (inv.hilbert.size() != 4 || inv.hilbert[2] != 3 || inv.hilbert[3] != 1) {
    throw PreconditionError("square generators need Hilbert function (1,n,3,1)");
  }
  const std::vector<std::size_t> cot = a.cotangent_basis();
  const std::vector<std::size_t> deg2 = indices_of_filtration(a, 2);
  const std::size_t n = cot.size();

  auto element_of = [&](const std::vector<long>& c) {
    AlgebraElement x = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      const Scalar s(f, c[i]);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += s * a.basis_element(cot[i])[k];
    }
    return x;
  };

  SquareGenerators out;
  std::vector<std::vector<Scalar>> squares;
  std::vector<std::vector<Scalar>> linear;
  std::mt19937_64 rng(opts.seed);
  auto try_candidate = [&](const std::vector<long>& c) {
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) return false;
    AlgebraElement x = element_of(c);
    std::vector<Scalar> sq = project(a.multiply(x, x), deg2);
    // Image of x -> x * m in m^2/m^3, so independence is taken modulo the
    // elements that multiply m into m^3.
    std::vector<Scalar> lin;
    for (auto j : cot) {
      const auto prod = project(a.multiply(x, a.basis_element(j)), deg2);
      lin.insert(lin.end(), prod.begin(), prod.end());
    }
    squares.push_back(sq);
    linear.push_back(lin);
    if (rank_of(f, squares, deg2.size()) == squares.size() && rank_of(f, linear, n * deg2.size()) == linear.size()) {
      const std::size_t k = squares.size() - 1;
      out.elements[k] = std::move(x);
      out.coefficients[k] = c;
      return true;
    }
    squares.pop_back();
    linear.pop_back();
    return false;
  };

  for (std::size_t k = 0; k < 3; ++k) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      std::vector<long> c(n, 0);
      c[i] = 1;
      found = try_candidate(c);
    }
    for (long width = 2; width <= 16 && !found; width *= 2) {
      std::uniform_int_distribution<long> dist(-width, width);
      for (std::size_t t = 0; t < opts.trials && !found; ++t) {
        std::vector<long> c(n);
        for (auto& v : c) v = dist(rng);
        found = try_candidate(c);
      }
    }
    if (!found) throw SearchExhausted("no element with an independent square found");
  }
  return out;
}

ConicNet relation_net(const LocalAlgebra& a, const SquareGenerators& gens) {
  const Field f = a.field();
  const std::vector<std::size_t> deg2 = indices_of_filtration(a, 2);
  static const std::array<std::pair<std::size_t, std::size_t>, 6> pairs{
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  DenseMatrix map(f, deg2.size(), 6);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto prod = project(a.multiply(gens.elements[pairs[c].first], gens.elements[pairs[c].second]), deg2);
    for (std::size_t r = 0; r < deg2.size(); ++r) map(r, c) = prod[r];
  }
  const auto kernel = map.nullspace_basis();
  if (kernel.size() != 3) {
    throw PreconditionError("relation space has dimension " + std::to_string(kernel.size()) + ", expected 3");
  }
  DenseMatrix rel(f, 3, 6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 6; ++c) rel(r, c) = kernel[r][c];
  }
  const auto rows = rel.reduced_row_echelon();

  ConicNet net;
  for (const auto& g : gens.elements) {
    net.generators.push_back(g);
    net.generator_names.push_back(a.format(g));
  }
  const Scalar half = Scalar::one(f) / Scalar(f, 2L);
  for (const auto& row : rows) {
    AlgebraElement check = a.zero();
    DenseMatrix q(f, 3, 3);
    for (std::size_t c = 0; c < 6; ++c) {
      const auto [i, j] = pairs[c];
      const Scalar v = i == j ? row[c] : row[c] * half;
      q(i, j) = v;
      q(j, i) = v;
      const AlgebraElement prod = a.multiply(gens.elements[i], gens.elements[j]);
      for (std::size_t k = 0; k < check.size(); ++k) check[k] += row[c] * prod[k];
    }
    if (a.filtration_of(check) < 3) throw InternalError("net relation does not vanish modulo m^3");
    net.matrices.push_back(std::move(q));
  }
  return net;
}

NetClassification classify_net(const LocalAlgebra& a, const SquareSearchOptions& opts) {
  NetClassification out{find_square_generators(a, opts), {}, {}, DiscriminantClass::IdenticallyZero};
  out.net = relation_net(a, out.squares);
  out.discriminant = discriminant(out.net.matrices);
  out.kind = classify_cubic(out.discriminant);
  return out;
}

}  // namespace poincare
