#include "poincare/dense_matrix.hpp"

#include "poincare/echelon.hpp"
#include "poincare/error.hpp"

namespace poincare {
namespace {

// Row r of the matrix as a primitive integer vector (Q) or residues (F_p).
SparseVector<Integer> integer_row(const std::vector<Scalar>& entries, std::size_t begin, std::size_t n,
                                  const Scalar* extra) {
  mpz_class scale = 1;
  auto visit_den = [&](const Scalar& s) {
    if (!s.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), s.rational().get_den_mpz_t());
  };
  for (std::size_t c = 0; c < n; ++c) visit_den(entries[begin + c]);
  if (extra) visit_den(*extra);
  SparseVector<Integer> out;
  auto push = [&](std::uint32_t col, const Scalar& s) {
    if (s.is_zero()) return;
    mpq_class v = s.rational() * scale;
    out.push_back({col, Integer(v.get_num())});
  };
  for (std::size_t c = 0; c < n; ++c) push(static_cast<std::uint32_t>(c), entries[begin + c]);
  if (extra) push(static_cast<std::uint32_t>(n), *extra);
  return out;
}

SparseVector<std::uint32_t> residue_row(const std::vector<Scalar>& entries, std::size_t begin, std::size_t n,
                                        const Scalar* extra) {
  SparseVector<std::uint32_t> out;
  for (std::size_t c = 0; c < n; ++c) {
    if (!entries[begin + c].is_zero()) out.push_back({static_cast<std::uint32_t>(c), entries[begin + c].residue()});
  }
  if (extra && !extra->is_zero()) out.push_back({static_cast<std::uint32_t>(n), extra->residue()});
  return out;
}

template <class Fn>
auto with_echelon(const DenseMatrix& m, const ScalarVector* rhs, const std::vector<Scalar>& entries, Fn&& fn) {
  const std::size_t width = m.cols() + (rhs ? 1 : 0);
  if (m.field().is_rational()) {
    Echelon<IntegerDomain> e(IntegerDomain{}, width);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      e.insert(integer_row(entries, r * m.cols(), m.cols(), rhs ? &(*rhs)[r] : nullptr));
    }
    return fn(e);
  }
  Echelon<PrimeDomain> e(PrimeDomain(m.field().characteristic()), width);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    e.insert(residue_row(entries, r * m.cols(), m.cols(), rhs ? &(*rhs)[r] : nullptr));
  }
  return fn(e);
}

Scalar to_scalar(Field f, const Integer& v) { return Scalar(f, v); }
Scalar to_scalar(Field f, std::uint32_t v) { return Scalar(f, Integer(static_cast<long>(v))); }

}  // namespace

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match its shape");
  if (!entries_.empty()) field_ = entries_.front().field();
  for (const auto& s : entries_) {
    if (!(s.field() == field_)) throw InputError("matrix entries belong to different fields");
  }
}

DenseMatrix DenseMatrix::from_integers(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ScalarVector DenseMatrix::operator*(const ScalarVector& v) const {
  if (v.size() != cols_) throw InputError("vector length does not match matrix columns");
  ScalarVector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

std::size_t DenseMatrix::rank() const {
  return with_echelon(*this, nullptr, entries_, [](auto& e) { return e.rank(); });
}

std::vector<ScalarVector> DenseMatrix::nullspace_basis() const {
  return with_echelon(*this, nullptr, entries_, [&](auto& e) {
    e.back_substitute();
    std::vector<ScalarVector> out;
    for (const auto& k : kernel_basis(e)) {
      ScalarVector v(cols_, Scalar::zero(field_));
      for (const auto& t : k) v[t.col] = to_scalar(field_, t.val);
      // kernel_basis puts the free coordinate last in the support
      const Scalar lead = v[k.back().col];
      for (auto& s : v) s /= lead;
      out.push_back(std::move(v));
    }
    return out;
  });
}

std::vector<ScalarVector> DenseMatrix::reduced_row_echelon() const {
  return with_echelon(*this, nullptr, entries_, [&](auto& e) {
    e.back_substitute();
    std::vector<ScalarVector> out;
    for (std::uint32_t c : e.pivot_columns()) {
      const auto& row = e.rows()[e.pivot_row(c)];
      ScalarVector v(cols_, Scalar::zero(field_));
      for (const auto& t : row) v[t.col] = to_scalar(field_, t.val);
      const Scalar lead = v[c];
      for (auto& s : v) s /= lead;
      out.push_back(std::move(v));
    }
    return out;
  });
}

std::optional<ScalarVector> DenseMatrix::solve_linear(const ScalarVector& rhs) const {
  if (rhs.size() != rows_) throw InputError("right-hand side length does not match matrix rows");
  for (const auto& s : rhs) {
    if (!(s.field() == field_)) throw InputError("right-hand side belongs to a different field");
  }
  return with_echelon(*this, &rhs, entries_, [&](auto& e) -> std::optional<ScalarVector> {
    if (e.is_pivot(static_cast<std::uint32_t>(cols_))) return std::nullopt;
    e.back_substitute();
    ScalarVector x(cols_, Scalar::zero(field_));
    for (const auto& row : e.rows()) {
      const auto& last = row.back();
      if (last.col != cols_) continue;
      x[row.front().col] = to_scalar(field_, last.val) / to_scalar(field_, row.front().val);
    }
    return x;
  });
}

}  // namespace poincare
