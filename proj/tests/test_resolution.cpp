#include <cstdlib>

#include "doctest.h"
#include "poincare/algebra.hpp"
#include "poincare/error.hpp"
#include "poincare/families.hpp"
#include "poincare/resolution.hpp"

using namespace poincare;

namespace {

LocalAlgebra algebra(std::size_t vars, std::vector<std::string> gens, std::uint64_t ch = 0) {
  IdealPresentation p;
  p.vars = vars;
  p.field = Field::of_characteristic(ch);
  p.generators = std::move(gens);
  return build_quotient_algebra(p);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of (1+z)^n / (1-z^2)^n.
std::vector<std::uint64_t> ci_series(std::uint64_t n, std::size_t order) {
  std::vector<std::uint64_t> out(order + 1, 0);
  for (std::size_t i = 0; i <= n && i <= order; ++i) {
    for (std::size_t j = 0; i + 2 * j <= order; ++j) out[i + 2 * j] += binom(n, i) * binom(n + j - 1, j);
  }
  return out;
}

void check_all_steps(const BettiResult& r) {
  CHECK(r.minimal);
  for (const auto& c : r.checks) {
    CHECK(c.minimal);
    CHECK(c.composition_zero);
    CHECK(c.exact);
  }
}

// d_p o d_{p+1} = 0 and exactness, recomputed with the dense engine.
void check_complex_independently(const ResolutionState& s) {
  const LocalAlgebra& a = s.algebra();
  for (std::size_t p = 1; p + 1 <= s.steps(); ++p) {
    const ModuleMap d = s.differential(p);
    const ModuleMap e = s.differential(p + 1);
    REQUIRE(d.source_rank() == e.target_rank());
    for (std::size_t i = 0; i < d.target_rank(); ++i) {
      for (std::size_t j = 0; j < e.source_rank(); ++j) {
        AlgebraElement sum = a.zero();
        for (std::size_t k = 0; k < d.source_rank(); ++k) {
          const auto prod = a.multiply(d.entry(i, k), e.entry(k, j));
          for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += prod[t];
        }
        CHECK(sum == a.zero());
      }
    }
    const std::size_t kernel = a.length() * d.source_rank() - d.expansion(a).rank();
    CHECK(kernel == e.expansion(a).rank());
    for (std::size_t i = 0; i < e.target_rank(); ++i) {
      for (std::size_t j = 0; j < e.source_rank(); ++j) CHECK(a.filtration_of(e.entry(i, j)) >= 1);
    }
  }
}

}  // namespace

TEST_CASE("hypersurfaces have constant Betti numbers") {
  for (const char* g : {"x1^2", "x1^3", "x1^5"}) {
    const auto r = betti_numbers(algebra(1, {g}), 8);
    CHECK(r.betti == std::vector<std::uint64_t>(9, 1));
    check_all_steps(r);
  }
}

TEST_CASE("complete intersections follow (1+z)^n/(1-z^2)^n") {
  CHECK(betti_numbers(algebra(2, {"x1^2", "x2^2"}), 8).betti == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  const auto r = betti_numbers(algebra(3, {"x1^3", "x2^2", "x3^2"}), 6);
  CHECK(r.betti == ci_series(3, 6));
  check_all_steps(r);
  CHECK(betti_numbers(algebra(3, {"x1^2", "x2^2+x1*x3", "x3^3"}), 5).betti == ci_series(3, 5));
}

TEST_CASE("m^2 = 0 gives n^p") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) gens.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
    }
    const auto r = betti_numbers(algebra(n, gens), 5);
    std::uint64_t pw = 1;
    for (std::size_t p = 0; p <= 5; ++p, pw *= n) CHECK(r.betti[p] == pw);
  }
}

TEST_CASE("differentials form a minimal exact complex") {
  auto s = ResolutionState::start(algebra(2, {"x1^2", "x1*x2^2", "x2^3"}));
  for (int i = 0; i < 4; ++i) s = s.step();
  check_complex_independently(s);
  auto t = ResolutionState::start(algebra(3, {"x1^2", "x1*x2", "2*x1*x3+x2^2", "x3^3", "x2*x3^2"}));
  for (int i = 0; i < 3; ++i) t = t.step();
  check_complex_independently(t);
  const ModuleMap d1 = t.differential(1);
  CHECK(d1.target_rank() == 1);
  CHECK(d1.source_rank() == 3);
}

TEST_CASE("b2 is C(n,2) plus the number of generators") {
  struct Case {
    std::size_t n;
    std::vector<std::string> gens;
  };
  const std::vector<Case> cases{
      {2, {"x1^2", "x2^2"}},
      {2, {"x1^2", "x1*x2", "x2^3"}},
      {3, {"x1^2", "x2^2", "x3^2", "x1*x2*x3"}},
      {3, {"x1*x2", "x1*x3", "x2*x3", "x1^3-x2^3", "x1^3-x3^3"}},
  };
  for (const auto& c : cases) {
    IdealPresentation p;
    p.vars = c.n;
    p.generators = c.gens;
    const auto r = betti_numbers(build_quotient_algebra(p), 2);
    CHECK(r.betti[1] == c.n);
    CHECK(r.betti[2] == c.n * (c.n - 1) / 2 + minimal_generator_count(p));
  }
  for (FamilyTag tag : {FamilyTag::I1, FamilyTag::I2, FamilyTag::I3, FamilyTag::I4, FamilyTag::I5, FamilyTag::I6}) {
    for (std::size_t n = 3; n <= 5; ++n) {
      FamilySpec spec;
      spec.tag = tag;
      spec.n = n;
      const auto p = family_ideal(spec);
      const auto r = betti_numbers(build_quotient_algebra(p), 2);
      CHECK(r.betti[2] == n * (n - 1) / 2 + minimal_generator_count(p));
    }
  }
}

TEST_CASE("Betti numbers agree over Q and F_p") {
  const std::vector<std::string> gens{"x1^2", "x1*x2", "2*x1*x3+x2^2", "x3^3", "x2*x3^2"};
  const auto q = betti_numbers(algebra(3, gens), 5);
  const auto p = betti_numbers(algebra(3, gens, 32003), 5);
  CHECK(q.betti == p.betti);
  CHECK(betti_numbers(algebra(3, gens, 101), 5).betti == q.betti);
  CHECK(p.field.name() == "F32003");
  CHECK(q.betti == std::vector<std::uint64_t>{1, 3, 8, 21, 55, 144});
}

TEST_CASE("the column budget stops with an exact prefix") {
  const auto a = algebra(3, {"x1^2", "x1*x2", "2*x1*x3+x2^2", "x3^3", "x2*x3^2"});
  ResolutionOptions tight;
  tight.column_budget = 200;
  try {
    betti_numbers(a, 6, tight);
    FAIL("expected a resource limit");
  } catch (const ResourceLimit& e) {
    const auto& partial = e.partial_betti();
    const std::vector<std::uint64_t> full{1, 3, 8, 21, 55, 144, 377};
    REQUIRE(!partial.empty());
    for (std::size_t i = 0; i < partial.size(); ++i) CHECK(partial[i] == full[i]);
  }
}

TEST_CASE("budget from the environment") {
  setenv("POINCARE_COLUMN_BUDGET", "1234", 1);
  CHECK(default_column_budget() == 1234);
  setenv("POINCARE_COLUMN_BUDGET", "junk", 1);
  CHECK(default_column_budget() == 20000);
  unsetenv("POINCARE_COLUMN_BUDGET");
  CHECK(default_column_budget() == 20000);
}

TEST_CASE("a field is resolved trivially") {
  IdealPresentation p;
  p.vars = 1;
  p.generators = {"x1^2"};
  const auto fld = quotient_by_ideal(build_quotient_algebra(p), {build_quotient_algebra(p).variable(0)});
  const auto r = betti_numbers(fld, 3);
  CHECK(r.betti == std::vector<std::uint64_t>{1, 0, 0, 0});
}
