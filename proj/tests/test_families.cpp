#include <algorithm>
#include <map>

#include "doctest.h"
#include "poincare/algebra.hpp"
#include "poincare/dense_matrix.hpp"
#include "poincare/error.hpp"
#include "poincare/families.hpp"

using namespace poincare;

namespace {

using Terms = std::map<Exponents, Integer>;

// g(d/dx) applied to f.
Terms apply(const Polynomial& g, const Polynomial& f) {
  Terms out;
  for (const auto& [mg, cg] : g.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      Exponents e = mf;
      Integer c = cg * cf;
      bool ok = true;
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        if (e[i] < mg[i]) {
          ok = false;
          break;
        }
        for (unsigned k = 0; k < mg[i]; ++k) c *= Integer(static_cast<long>(e[i] - k));
        e[i] = static_cast<std::uint16_t>(e[i] - mg[i]);
      }
      if (!ok) continue;
      out[e] += c;
      if (out[e].is_zero()) out.erase(e);
    }
  }
  return out;
}

// Dimension of the span of all partial derivatives of f, the length of its
// apolar algebra.
std::size_t derivative_span(const Polynomial& f) {
  std::vector<Exponents> ops{Exponents(f.vars(), 0)};
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t v = 0; v < f.vars(); ++v) {
      Exponents e = ops[i];
      ++e[v];
      if (total_degree(e) <= f.degree() && std::find(ops.begin(), ops.end(), e) == ops.end()) ops.push_back(e);
    }
  }
  std::vector<Terms> rows;
  std::map<Exponents, std::size_t> column;
  for (const auto& e : ops) {
    Polynomial g(f.vars());
    g.add_term(e, 1);
    rows.push_back(apply(g, f));
    for (const auto& [m, c] : rows.back()) column.emplace(m, column.size());
  }
  const Field q = Field::rationals();
  DenseMatrix m(q, rows.size(), std::max<std::size_t>(column.size(), 1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [mono, c] : rows[r]) m(r, column[mono]) = Scalar(q, c);
  }
  return m.rank();
}

const FamilyTag kH1331[] = {FamilyTag::I1, FamilyTag::I2, FamilyTag::I3, FamilyTag::I4, FamilyTag::I5, FamilyTag::I6};

}  // namespace

TEST_CASE("family generator lists") {
  FamilySpec s;
  s.tag = FamilyTag::I1;
  s.n = 3;
  CHECK(family_ideal(s).generators == std::vector<std::string>{"x1*x2+x3^2", "x1*x3", "x1^2+x2^2"});
  s.tag = FamilyTag::I3;
  s.n = 4;
  CHECK(family_ideal(s).generators ==
        std::vector<std::string>{"x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4", "x3*x4", "x4^2-x1*x2*x3"});
  s.tag = FamilyTag::I6;
  s.n = 5;
  const auto i6 = family_ideal(s);
  CHECK(i6.generators.size() == 14);
  CHECK(i6.generators.back() == "x5^2-x1*x3^2");
  CHECK(minimal_generator_count(i6) == 14);
  s.tag = FamilyTag::I2;
  s.n = 3;
  CHECK(family_ideal(s).generators[2] == "x3^2+2*x1*x2");
  s.p = 0;
  CHECK_THROWS_AS(family_ideal(s), InputError);
  s.tag = FamilyTag::I1;
  s.p = -1;
  s.alpha = 2;
  CHECK(family_ideal(s).generators[2] == "x1^2+x2^2-2*x3^2");
}

TEST_CASE("H = (1,n,3,1) families are Gorenstein of length n+5") {
  for (FamilyTag tag : kH1331) {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (long alpha : {0L, 1L}) {
        FamilySpec s;
        s.tag = tag;
        s.n = n;
        if (tag == FamilyTag::I1) s.alpha = alpha;
        const auto a = build_quotient_algebra(family_ideal(s));
        const auto inv = algebra_invariants(a);
        CHECK(inv.hilbert == std::vector<std::size_t>{1, n, 3, 1});
        CHECK(inv.gorenstein);
        CHECK(inv.length == n + 5);
        CHECK(check_structure(a));
      }
    }
  }
}

TEST_CASE("family preconditions") {
  FamilySpec s;
  s.tag = FamilyTag::I4;
  s.n = 2;
  CHECK_THROWS_AS(family_ideal(s), InputError);
  s.n = 3;
  s.field = Field::prime(3);
  CHECK_THROWS_AS(family_ideal(s), PreconditionError);
  s.field = Field::prime(2);
  CHECK_THROWS_AS(family_ideal(s), PreconditionError);
  s.field = Field::prime(5);
  CHECK(algebra_invariants(build_quotient_algebra(family_ideal(s))).hilbert == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(parse_family_tag("almost-stretched") == FamilyTag::AlmostStretched);
  CHECK_THROWS_AS(parse_family_tag("I7"), InputError);
  CHECK(family_name(FamilyTag::CI) == "CI");
}

TEST_CASE("complete intersections") {
  const auto p = ci_ideal({3, 2, 2});
  CHECK(p.generators == std::vector<std::string>{"x1^3", "x2^2", "x3^2"});
  CHECK(algebra_invariants(build_quotient_algebra(p)).length == 12);
  CHECK_THROWS_AS(ci_ideal({1, 2}), InputError);
}

TEST_CASE("inverse systems annihilate their dual generator") {
  const std::vector<std::pair<std::string, std::size_t>> duals{
      {"x1^2", 1}, {"x1^3+x2^2+x3^2", 3}, {"x1^4+x1^2*x2+x3^2", 3}, {"x1*x2*x3", 3},
      {"x1^3+x2^3", 2}, {"x1^5+x2^2", 2}, {"x1^4+x2^3+x3^2+x4^2", 4}};
  for (const auto& [text, vars] : duals) {
    const auto f = Polynomial::parse(text, vars);
    const auto p = inverse_system_ideal(f, vars, f.degree() + 1);
    for (const auto& g : p.polynomials()) CHECK(apply(g, f).empty());
    const auto a = build_quotient_algebra(p);
    const auto inv = algebra_invariants(a);
    CHECK(inv.gorenstein);
    CHECK(inv.length == derivative_span(f));
    CHECK(inv.level == f.degree());
    CHECK(minimal_generator_count(p) == p.generators.size());
  }
  const auto f = Polynomial::parse("x1^2", 1);
  CHECK(inverse_system_ideal(f, 1, 3).generators == std::vector<std::string>{"x1^3"});
  CHECK_THROWS_AS(inverse_system_ideal(Polynomial(2), 2, 3), InputError);
  CHECK_THROWS_AS(inverse_system_ideal(Polynomial::parse("x1^3", 2), 2, 4), PreconditionError);
}

TEST_CASE("a mixed quartic dual gives H = (1,3,1,1,1)") {
  const auto f = Polynomial::parse("x1^4+x1^2*x2+x3^2", 3);
  const auto inv = algebra_invariants(build_quotient_algebra(inverse_system_ideal(f, 3, 5)));
  CHECK(derivative_span(f) == 7);
  CHECK(inv.hilbert == std::vector<std::size_t>{1, 3, 1, 1, 1});
}

TEST_CASE("stretched and almost stretched duals") {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (unsigned e = 3; e <= 5; ++e) {
      FamilySpec s;
      s.tag = FamilyTag::Stretched;
      s.n = n;
      s.socle_degree = e;
      auto inv = algebra_invariants(build_quotient_algebra(family_ideal(s)));
      std::vector<std::size_t> h{1, n};
      for (unsigned t = 2; t <= e; ++t) h.push_back(1);
      CHECK(inv.hilbert == h);
      CHECK(inv.gorenstein);

      s.tag = FamilyTag::AlmostStretched;
      inv = algebra_invariants(build_quotient_algebra(family_ideal(s)));
      h[2] = 2;
      CHECK(inv.hilbert == h);
      CHECK(inv.gorenstein);
    }
  }
  CHECK(stretched_dual(3, 3).to_string() == "x2^2+x3^2+x1^3");
}

TEST_CASE("complete intersection lengths and generator counts") {
  for (const std::vector<unsigned>& e : {std::vector<unsigned>{2}, {4}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 2, 4}, {2, 2, 2, 3}}) {
    const auto p = ci_ideal(e);
    std::size_t prod = 1;
    for (auto x : e) prod *= x;
    CHECK(algebra_invariants(build_quotient_algebra(p)).length == prod);
    CHECK(minimal_generator_count(p) == e.size());
  }
}
