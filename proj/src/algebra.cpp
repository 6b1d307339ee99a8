#include "poincare/algebra.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>

#include "poincare/echelon.hpp"
#include "poincare/error.hpp"

namespace poincare {
namespace {

// k[x1..xn]/m^N with its monomial basis in local order.
class TruncatedRing {
 public:
  TruncatedRing(std::size_t vars, std::size_t truncation) : vars_(vars), truncation_(truncation) {
    Exponents e(vars, 0);
    for (std::size_t d = 0; d < truncation; ++d) enumerate(e, 0, static_cast<unsigned>(d));
    for (std::uint32_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const { return monomials_.size(); }
  std::size_t truncation() const { return truncation_; }
  const Exponents& monomial(std::size_t i) const { return monomials_[i]; }

  std::optional<std::uint32_t> index(const Exponents& e) const {
    if (total_degree(e) >= truncation_) return std::nullopt;
    return index_.at(e);
  }

  // (coefficient, monomial index) pairs of p * x^shift, dropping terms in m^N.
  template <class Fn>
  void for_each_shifted(const Polynomial& p, const Exponents& shift, Fn&& fn) const {
    Exponents e(vars_);
    for (const auto& [mono, c] : p.terms()) {
      for (std::size_t v = 0; v < vars_; ++v) e[v] = static_cast<std::uint16_t>(mono[v] + shift[v]);
      if (auto idx = index(e)) fn(*idx, c);
    }
  }

 private:
  // Degree-d monomials with x1 exponent descending: lex order x1 > x2 > ...
  void enumerate(Exponents& e, std::size_t var, unsigned remaining) {
    if (var + 1 == vars_) {
      e[var] = static_cast<std::uint16_t>(remaining);
      monomials_.push_back(e);
      return;
    }
    for (int k = static_cast<int>(remaining); k >= 0; --k) {
      e[var] = static_cast<std::uint16_t>(k);
      enumerate(e, var + 1, remaining - static_cast<unsigned>(k));
    }
    e[var] = 0;
  }

  std::size_t vars_;
  std::size_t truncation_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::uint32_t> index_;
};

template <class D>
typename D::Elem coefficient(const D& d, const Integer& c) {
  if constexpr (std::is_same_v<D, IntegerDomain>) {
    return c;
  } else {
    return Integer::mod(c, d.modulus());
  }
}

template <class D>
SparseVector<typename D::Elem> shifted_vector(const D& d, const TruncatedRing& ring, const Polynomial& g,
                                              const Exponents& shift) {
  std::map<std::uint32_t, typename D::Elem> acc;
  ring.for_each_shifted(g, shift, [&](std::uint32_t idx, const Integer& c) {
    auto x = coefficient(d, c);
    if (D::is_zero(x)) return;
    auto [it, fresh] = acc.try_emplace(idx, x);
    if (!fresh) it->second = d.add(it->second, x);
  });
  SparseVector<typename D::Elem> v;
  for (auto& [idx, x] : acc) {
    if (!D::is_zero(x)) v.push_back({idx, std::move(x)});
  }
  return v;
}

// Span of {g * m} in the truncated ring, built in the requested domain.
template <class D>
Echelon<D> ideal_span(const D& d, const TruncatedRing& ring, const std::vector<Polynomial>& gens) {
  Echelon<D> e(d, ring.size());
  for (const auto& g : gens) {
    const unsigned order = g.order();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (g.is_zero() || total_degree(ring.monomial(i)) + order >= ring.truncation()) break;
      e.insert(shifted_vector(d, ring, g, ring.monomial(i)));
    }
  }
  return e;
}

Scalar to_scalar(Field f, const Integer& num, const Integer& den) {
  return Scalar(f, mpq_class(num.to_mpz(), den.to_mpz()));
}

// The quotient T / I_T: kept monomials plus the normal form of every ring
// monomial in terms of them.
struct Quotient {
  std::vector<std::uint32_t> kept;
  std::vector<AlgebraElement> normal_form;
  std::vector<std::size_t> hilbert;
};

template <class D>
Quotient quotient_ring(Field field, const D& d, const TruncatedRing& ring, const std::vector<Polynomial>& gens) {
  Echelon<D> e = ideal_span(d, ring, gens);
  e.back_substitute();
  Quotient q;
  std::vector<int> position(ring.size(), -1);
  for (std::uint32_t i = 0; i < ring.size(); ++i) {
    if (!e.is_pivot(i)) {
      position[i] = static_cast<int>(q.kept.size());
      q.kept.push_back(i);
    }
  }
  const std::size_t len = q.kept.size();
  q.normal_form.assign(ring.size(), AlgebraElement(len, Scalar::zero(field)));
  for (std::uint32_t i = 0; i < ring.size(); ++i) {
    if (position[i] >= 0) {
      q.normal_form[i][position[i]] = Scalar::one(field);
      continue;
    }
    const auto& row = e.rows()[e.pivot_row(i)];
    for (std::size_t k = 1; k < row.size(); ++k) {
      const int pos = position[row[k].col];
      if constexpr (std::is_same_v<D, IntegerDomain>) {
        q.normal_form[i][pos] = to_scalar(field, -row[k].val, row.front().val);
      } else {
        q.normal_form[i][pos] = Scalar(field, Integer(static_cast<long>(d.neg(row[k].val))));
      }
    }
  }
  for (std::uint32_t idx : q.kept) {
    const unsigned deg = total_degree(ring.monomial(idx));
    if (q.hilbert.size() <= deg) q.hilbert.resize(deg + 1, 0);
    ++q.hilbert[deg];
  }
  return q;
}

template <class Fn>
auto with_domain(Field field, Fn&& fn) {
  if (field.is_rational()) return fn(IntegerDomain{});
  return fn(PrimeDomain(field.characteristic()));
}

Quotient quotient_ring(Field field, const TruncatedRing& ring, const std::vector<Polynomial>& gens) {
  return with_domain(field, [&](const auto& d) { return quotient_ring(field, d, ring, gens); });
}

}  // namespace

int LocalAlgebra::filtration_of(const AlgebraElement& a) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) return filtration_[i];
  }
  return INT_MAX;
}

std::vector<std::size_t> LocalAlgebra::cotangent_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length(); ++i) {
    if (filtration_[i] == 1) out.push_back(i);
  }
  return out;
}

AlgebraElement LocalAlgebra::zero() const { return AlgebraElement(length(), Scalar::zero(field_)); }

AlgebraElement LocalAlgebra::basis_element(std::size_t i) const {
  AlgebraElement e = zero();
  e.at(i) = Scalar::one(field_);
  return e;
}

AlgebraElement LocalAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.size() != length() || b.size() != length()) throw InputError("algebra element has the wrong length");
  AlgebraElement out = zero();
  for (std::size_t i = 0; i < length(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < length(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      const AlgebraElement& p = product(i, j);
      for (std::size_t k = 0; k < length(); ++k) {
        if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return out;
}

AlgebraElement LocalAlgebra::evaluate(const Polynomial& p) const {
  if (p.vars() != vars_) throw InputError("polynomial has the wrong number of variables");
  AlgebraElement out = zero();
  for (const auto& [e, c] : p.terms()) {
    AlgebraElement term = unit();
    for (std::size_t v = 0; v < vars_; ++v) {
      for (unsigned k = 0; k < e[v]; ++k) term = multiply(term, variables_[v]);
    }
    const Scalar s(field_, c);
    for (std::size_t k = 0; k < length(); ++k) out[k] += s * term[k];
  }
  return out;
}

std::string LocalAlgebra::format(const AlgebraElement& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::string c = a[i].to_string();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const std::string mono = format_monomial(basis_[i]);
    if (mono == "1") {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

LocalAlgebra LocalAlgebra::from_table(Field field, std::size_t vars, std::vector<Exponents> basis,
                                      std::vector<int> filtration, std::vector<AlgebraElement> table,
                                      std::vector<AlgebraElement> variables, std::size_t truncation) {
  const std::size_t len = basis.size();
  if (filtration.size() != len || table.size() != len * len || variables.size() != vars) {
    throw InputError("inconsistent multiplication table");
  }
  LocalAlgebra a;
  a.field_ = field;
  a.vars_ = vars;
  a.truncation_ = truncation;
  a.basis_ = std::move(basis);
  a.filtration_ = std::move(filtration);
  a.table_ = std::move(table);
  a.variables_ = std::move(variables);
  return a;
}

LocalAlgebra build_quotient_algebra(const IdealPresentation& p) {
  p.validate();
  const std::vector<Polynomial> gens = p.polynomials();
  const std::size_t n = p.effective_truncation();
  const TruncatedRing ring(p.vars, n);
  const Quotient q = quotient_ring(p.field, ring, gens);
  {
    const TruncatedRing deeper(p.vars, n + 1);
    const Quotient check = quotient_ring(p.field, deeper, gens);
    if (check.hilbert != q.hilbert) {
      throw TruncationTooSmall("truncation N=" + std::to_string(n) +
                               " is too small: the Hilbert function changes at N+1 (is the ideal m-primary?)");
    }
  }
  const std::size_t len = q.kept.size();
  std::vector<Exponents> basis;
  std::vector<int> filtration;
  for (std::uint32_t idx : q.kept) {
    basis.push_back(ring.monomial(idx));
    filtration.push_back(static_cast<int>(total_degree(ring.monomial(idx))));
  }
  std::vector<AlgebraElement> table(len * len, AlgebraElement(len, Scalar::zero(p.field)));
  Exponents e(p.vars);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      for (std::size_t v = 0; v < p.vars; ++v) e[v] = static_cast<std::uint16_t>(basis[i][v] + basis[j][v]);
      if (auto idx = ring.index(e)) table[i * len + j] = q.normal_form[*idx];
    }
  }
  std::vector<AlgebraElement> variables;
  for (std::size_t v = 0; v < p.vars; ++v) {
    Exponents x(p.vars, 0);
    x[v] = 1;
    variables.push_back(q.normal_form[*ring.index(x)]);
  }
  return LocalAlgebra::from_table(p.field, p.vars, std::move(basis), std::move(filtration), std::move(table),
                                  std::move(variables), n);
}

AlgebraInvariants algebra_invariants(const LocalAlgebra& a) {
  AlgebraInvariants inv;
  inv.length = a.length();
  inv.multiplicity = a.length();
  for (int f : a.filtration()) {
    const auto t = static_cast<std::size_t>(f);
    if (inv.hilbert.size() <= t) inv.hilbert.resize(t + 1, 0);
    ++inv.hilbert[t];
  }
  inv.level = inv.hilbert.size() - 1;
  inv.emdim = inv.hilbert.size() > 1 ? inv.hilbert[1] : 0;
  if (a.length() == 1) {
    inv.socle.push_back(a.unit());
  } else {
    const std::size_t len = a.length();
    DenseMatrix m(a.field(), a.vars() * len, len);
    for (std::size_t j = 0; j < len; ++j) {
      const AlgebraElement ej = a.basis_element(j);
      for (std::size_t l = 0; l < a.vars(); ++l) {
        const AlgebraElement prod = a.multiply(a.variable(l), ej);
        for (std::size_t r = 0; r < len; ++r) m(l * len + r, j) = prod[r];
      }
    }
    inv.socle = m.nullspace_basis();
  }
  inv.gorenstein = inv.socle.size() == 1;
  return inv;
}

std::vector<std::size_t> minimal_generator_subset(const IdealPresentation& p) {
  const LocalAlgebra a = build_quotient_algebra(p);
  const std::size_t level = algebra_invariants(a).level;
  const std::size_t n = std::max(p.effective_truncation(), level + 2);
  const TruncatedRing ring(p.vars, n);
  const std::vector<Polynomial> gens = p.polynomials();
  return with_domain(p.field, [&](const auto& d) {
    using D = std::decay_t<decltype(d)>;
    const Echelon<D> span = ideal_span(d, ring, gens);
    Echelon<D> shifted(d, ring.size());
    for (const auto& row : span.rows()) {
      for (std::size_t v = 0; v < p.vars; ++v) {
        SparseVector<typename D::Elem> out;
        Exponents e;
        for (const auto& t : row) {
          e = ring.monomial(t.col);
          ++e[v];
          if (auto idx = ring.index(e)) out.push_back({*idx, t.val});
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
        shifted.insert(std::move(out));
      }
    }
    std::vector<std::size_t> kept;
    const Exponents one(p.vars, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (shifted.insert(shifted_vector(d, ring, gens[i], one))) kept.push_back(i);
    }
    if (shifted.rank() != span.rank()) {
      throw InternalError("generator subset does not match dim I/mI");
    }
    return kept;
  });
}

std::size_t minimal_generator_count(const IdealPresentation& p) { return minimal_generator_subset(p).size(); }

LocalAlgebra quotient_by_ideal(const LocalAlgebra& a, const std::vector<AlgebraElement>& ideal) {
  const std::size_t len = a.length();
  std::vector<Scalar> entries;
  for (const auto& v : ideal) {
    if (v.size() != len) throw InputError("ideal element has the wrong length");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  const DenseMatrix m(ideal.size(), len, std::move(entries));
  const std::vector<ScalarVector> rows = ideal.empty() ? std::vector<ScalarVector>{} : m.reduced_row_echelon();
  std::vector<int> pivot_of(len, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < len; ++c) {
      if (!rows[r][c].is_zero()) {
        pivot_of[c] = static_cast<int>(r);
        break;
      }
    }
  }
  if (pivot_of[0] >= 0) throw PreconditionError("the ideal contains a unit");
  std::vector<std::size_t> kept;
  std::vector<int> position(len, -1);
  for (std::size_t c = 0; c < len; ++c) {
    if (pivot_of[c] < 0) {
      position[c] = static_cast<int>(kept.size());
      kept.push_back(c);
    }
  }
  const Field f = a.field();
  auto project = [&](const AlgebraElement& v) {
    AlgebraElement out(kept.size(), Scalar::zero(f));
    for (std::size_t c = 0; c < len; ++c) {
      if (v[c].is_zero()) continue;
      if (position[c] >= 0) {
        out[position[c]] += v[c];
        continue;
      }
      const ScalarVector& row = rows[pivot_of[c]];
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (!row[kept[k]].is_zero()) out[k] -= v[c] * row[kept[k]];
      }
    }
    return out;
  };
  std::vector<Exponents> basis;
  std::vector<int> filtration;
  for (std::size_t c : kept) {
    basis.push_back(a.basis()[c]);
    filtration.push_back(a.filtration()[c]);
  }
  std::vector<AlgebraElement> table;
  table.reserve(kept.size() * kept.size());
  for (std::size_t i : kept) {
    for (std::size_t j : kept) table.push_back(project(a.product(i, j)));
  }
  std::vector<AlgebraElement> variables;
  for (std::size_t l = 0; l < a.vars(); ++l) variables.push_back(project(a.variable(l)));
  return LocalAlgebra::from_table(f, a.vars(), std::move(basis), std::move(filtration), std::move(table),
                                  std::move(variables), 0);
}

LocalAlgebra quotient_by_socle(const LocalAlgebra& a) {
  if (a.length() < 2) throw PreconditionError("the residue field has no proper socle quotient");
  return quotient_by_ideal(a, algebra_invariants(a).socle);
}

bool check_structure(const LocalAlgebra& a) {
  const std::size_t len = a.length();
  const AlgebraElement one = a.unit();
  for (std::size_t i = 0; i < len; ++i) {
    const AlgebraElement ei = a.basis_element(i);
    if (a.multiply(one, ei) != ei) return false;
    for (std::size_t j = 0; j < len; ++j) {
      if (a.product(i, j) != a.product(j, i)) return false;
      const int f = a.filtration_of(a.product(i, j));
      if (f != INT_MAX && f < a.filtration()[i] + a.filtration()[j]) return false;
      const AlgebraElement eij = a.product(i, j);
      for (std::size_t k = 0; k < len; ++k) {
        const AlgebraElement ek = a.basis_element(k);
        if (a.multiply(eij, ek) != a.multiply(ei, a.product(j, k))) return false;
      }
    }
  }
  return true;
}

}  // namespace poincare
