#include <gmpxx.h>

#include <random>

#include "doctest.h"
#include "poincare/dense_matrix.hpp"
#include "poincare/echelon.hpp"
#include "poincare/error.hpp"
#include "poincare/field.hpp"
#include "poincare/integer.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/presentation.hpp"

using namespace poincare;

namespace {

mpz_class ref(const Integer& v) { return mpz_class(v.to_string()); }

// Values clustered around the int64 boundary, where the fast path switches.
long long edge_value(std::mt19937_64& rng) {
  static const long long anchors[] = {0, 1, -1, 3037000499LL, -3037000499LL, INT64_MAX, INT64_MIN + 1, INT64_MAX / 2};
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> jitter(-3, 3);
  const long long a = anchors[pick(rng)];
  const int j = jitter(rng);
  if ((j > 0 && a > INT64_MAX - j) || (j < 0 && a < INT64_MIN + 1 - j)) return a;
  return a + j;
}

}  // namespace

TEST_CASE("integer arithmetic agrees with GMP across the int64 boundary") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4000; ++trial) {
    const long long x = edge_value(rng);
    const long long y = edge_value(rng);
    const Integer a(x), b(y);
    const mpz_class ma(std::to_string(x)), mb(std::to_string(y));
    CHECK(ref(a + b) == ma + mb);
    CHECK(ref(a - b) == ma - mb);
    CHECK(ref(a * b) == ma * mb);
    const Integer big = a * b * a;
    CHECK(ref(big) == ma * mb * ma);
    if (y != 0) {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
      CHECK(ref(a / b) == q);
      CHECK(ref(a % b) == r);
      CHECK(ref(Integer::divexact(a * b, b)) == ma);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
    CHECK(ref(Integer::gcd(a, b)) == g);
    CHECK(((a < b) == (ma < mb)));
    CHECK(((a == b) == (ma == mb)));
  }
}

TEST_CASE("integer parsing and printing round trip") {
  for (const char* s : {"0", "-1", "9223372036854775807", "-9223372036854775808", "123456789012345678901234567890"}) {
    CHECK(Integer::parse(s).to_string() == s);
  }
  CHECK(Integer::parse("9223372036854775808").fits_int64() == false);
  CHECK_THROWS_AS(Integer::parse("12a"), InputError);
  CHECK_THROWS_AS(Integer::parse(""), InputError);
  CHECK(Integer::lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(Integer::mod(Integer(-7), 5) == 3u);
}

TEST_CASE("field selectors and scalar arithmetic") {
  CHECK(Field::parse_selector("Q").is_rational());
  CHECK(Field::parse_selector("p:32003").characteristic() == 32003u);
  CHECK_THROWS_AS(Field::parse_selector("p:32004"), InputError);
  CHECK_THROWS_AS(Field::parse_selector("p:1"), InputError);
  CHECK_THROWS_AS(Field::parse_selector("R"), InputError);
  CHECK(Field::prime(7).name() == "F7");

  const Field q = Field::rationals();
  const Scalar half = Scalar(q, 1L) / Scalar(q, 2L);
  CHECK(half.to_string() == "1/2");
  CHECK((Scalar(q, mpq_class(mpz_class(6), mpz_class(-4)))).to_string() == "-3/2");

  const Field f = Field::prime(101);
  for (long v = 1; v < 101; ++v) CHECK((Scalar(f, v) * Scalar(f, v).inverse()).is_one());
  CHECK(Scalar(f, -1L).residue() == 100u);
  CHECK_THROWS_AS(Scalar(q, 1L) + Scalar(f, 1L), InputError);
}

TEST_CASE("dense rank, nullspace and solve") {
  const Field q = Field::rationals();
  const auto m = DenseMatrix::from_integers(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  const auto ker = m.nullspace_basis();
  REQUIRE(ker.size() == 1);
  for (const auto& x : m * ker[0]) CHECK(x.is_zero());

  const auto sol = m.solve_linear({Scalar(q, 6L), Scalar(q, 12L), Scalar(q, 2L)});
  REQUIRE(sol);
  const auto back = m * *sol;
  CHECK(back[0] == Scalar(q, 6L));
  CHECK(back[2] == Scalar(q, 2L));
  CHECK_FALSE(m.solve_linear({Scalar(q, 1L), Scalar(q, 1L), Scalar(q, 1L)}));
  CHECK(DenseMatrix::identity(Field::prime(5), 4).rank() == 4);
  // 2x + 4y over F_2 style degeneracy shows up modulo small primes.
  CHECK(DenseMatrix::from_integers(Field::prime(3), {{1, 2}, {2, 1}}).rank() == 1);
}

TEST_CASE("random matrices: rank-nullity and kernel annihilation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (std::uint64_t c : {0ULL, 7ULL, 32003ULL}) {
    const Field f = Field::of_characteristic(c);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
      std::vector<std::vector<long>> e(rows, std::vector<long>(cols));
      for (auto& r : e) {
        for (auto& x : r) x = trial % 3 == 0 ? coef(rng) * (coef(rng) == 0) : coef(rng);
      }
      const auto m = DenseMatrix::from_integers(f, e);
      const auto ker = m.nullspace_basis();
      CHECK(ker.size() + m.rank() == cols);
      for (const auto& v : ker) {
        for (const auto& x : m * v) CHECK(x.is_zero());
      }
      const auto rref = m.reduced_row_echelon();
      CHECK(rref.size() == m.rank());
    }
  }
}

TEST_CASE("sparse echelon matches the dense engine") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 7, cols = 2 + (trial * 5) % 9;
    std::vector<std::vector<long>> e(rows, std::vector<long>(cols));
    for (auto& r : e) {
      for (auto& x : r) x = coef(rng) % 3 == 0 ? coef(rng) : 0;
    }
    Echelon<IntegerDomain> over_q(IntegerDomain{}, cols);
    Echelon<PrimeDomain> over_p(PrimeDomain(7), cols);
    for (const auto& r : e) {
      SparseVector<Integer> v;
      SparseVector<std::uint32_t> w;
      for (std::uint32_t j = 0; j < cols; ++j) {
        if (r[j] != 0) v.push_back({j, Integer(r[j])});
        const long m = ((r[j] % 7) + 7) % 7;
        if (m != 0) w.push_back({j, static_cast<std::uint32_t>(m)});
      }
      over_q.insert(v);
      over_p.insert(w);
    }
    CHECK(over_q.rank() == DenseMatrix::from_integers(Field::rationals(), e).rank());
    CHECK(over_p.rank() == DenseMatrix::from_integers(Field::prime(7), e).rank());
    over_q.back_substitute();
    for (const auto& k : kernel_basis(over_q)) {
      for (const auto& r : e) {
        Integer dot = 0;
        for (const auto& t : k) dot += Integer(r[t.col]) * t.val;
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("polynomial grammar") {
  const auto p = Polynomial::parse("x1*x2 + x3^2", 3);
  CHECK(p.terms().size() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.order() == 2);
  CHECK(Polynomial::parse(" 2 * x1 ^ 2 - 3*x2*x1 ", 2).to_string() == "2*x1^2-3*x1*x2");
  CHECK(Polynomial::parse("x1^2 - x1^2", 1).is_zero());
  CHECK_THROWS_AS(Polynomial::parse("x4", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x0^2", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("(x1+x2)^2", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1^", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("2*", 2), ParseError);
  CHECK(local_order_less(Exponents{0, 2}, Exponents{1, 1}) == false);
  CHECK(local_order_less(Exponents{1, 1}, Exponents{0, 2}));
  CHECK(local_order_less(Exponents{1, 0}, Exponents{0, 2}));
  CHECK(format_monomial(Exponents{2, 0, 1}) == "x1^2*x3");
}

TEST_CASE("presentation validation") {
  IdealPresentation p;
  p.vars = 2;
  p.generators = {"x1^2", "x2^2 + x1"};
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p.generators = {"x1^2", "1 + x2^2"};
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p.generators = {"x1^2", "x2^3"};
  CHECK_NOTHROW(p.validate());
  CHECK(p.effective_truncation() == 6);
  p.truncation = 4;
  CHECK(p.effective_truncation() == 4);
  p.vars = 0;
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("rank over Q bounds the rank mod p") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 5, cols = 2 + (trial * 3) % 6;
    std::vector<std::vector<long>> e(rows, std::vector<long>(cols));
    for (auto& r : e) {
      for (auto& x : r) x = coef(rng);
    }
    // Rows divisible by the prime after the first force rank drops mod p.
    if (trial % 2 == 0) {
      for (auto& x : e[0]) x *= 5;
    }
    const std::size_t rq = DenseMatrix::from_integers(Field::rationals(), e).rank();
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) CHECK(rq >= DenseMatrix::from_integers(Field::prime(p), e).rank());
  }
}
