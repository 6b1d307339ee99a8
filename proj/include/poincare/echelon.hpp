#pragma once

// Sparse row-echelon engine shared by every linear-algebra consumer in the
// library. Two coefficient domains are provided:
//
//   IntegerDomain  exact elimination over Q carried out on integer rows.
//                  Rows are kept primitive (content 1, positive leading
//                  entry) and combined fraction-free: v <- a'v - b'r with
//                  a' = a/g, b' = b/g, g = gcd(a, b).
//   PrimeDomain    plain Gaussian elimination modulo p with monic rows.
//
// Scaling a row never changes the span it contributes to, so integer rows
// stand in for rational ones everywhere spans, ranks and kernels are the
// only quantities of interest.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "poincare/integer.hpp"

namespace poincare {

template <class E>
struct Term {
  std::uint32_t col;
  E val;
};

template <class E>
using SparseVector = std::vector<Term<E>>;

class IntegerDomain {
 public:
  using Elem = Integer;

  static bool is_zero(const Elem& e) { return e.is_zero(); }
  static Elem from_long(long v) { return Elem(v); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }

  // Divide by the content and make the leading entry positive.
  static void normalize(SparseVector<Elem>& v) {
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& t : v) {
      g = Integer::gcd(g, t.val);
      if (g.is_one()) break;
    }
    const bool flip = v.front().val.sign() < 0;
    if (g.is_one() && !flip) return;
    if (flip) g = -g;
    for (auto& t : v) t.val = Integer::divexact(t.val, g);
  }

  // Cancel the entry v[pos] using row r whose leading column equals v[pos].col.
  static void eliminate(SparseVector<Elem>& v, std::size_t pos, const SparseVector<Elem>& r,
                        SparseVector<Elem>& scratch) {
    const Integer& a = r.front().val;
    Integer b = v[pos].val;
    Integer va = 1;  // multiplier for v
    Integer rb;      // multiplier for r (subtracted)
    if (a.is_one()) {
      rb = std::move(b);
    } else {
      Integer g = Integer::gcd(a, b);
      va = Integer::divexact(a, g);
      rb = Integer::divexact(b, g);
    }
    scratch.clear();
    scratch.reserve(v.size() + r.size());
    bool big = false;
    auto vi = v.begin();
    auto ri = r.begin();
    const bool scale = !va.is_one();
    while (vi != v.end() || ri != r.end()) {
      if (ri == r.end() || (vi != v.end() && vi->col < ri->col)) {
        Integer x = scale ? vi->val * va : vi->val;
        big |= !x.fits_int64();
        scratch.push_back({vi->col, std::move(x)});
        ++vi;
      } else if (vi == v.end() || ri->col < vi->col) {
        Integer x = -(ri->val * rb);
        big |= !x.fits_int64();
        scratch.push_back({ri->col, std::move(x)});
        ++ri;
      } else {
        Integer x = scale ? vi->val * va : vi->val;
        x -= ri->val * rb;
        if (!x.is_zero()) {
          big |= !x.fits_int64();
          scratch.push_back({vi->col, std::move(x)});
        }
        ++vi;
        ++ri;
      }
    }
    v.swap(scratch);
    if (big) normalize(v);
  }
};

class PrimeDomain {
 public:
  using Elem = std::uint32_t;

  PrimeDomain() = default;
  explicit PrimeDomain(std::uint32_t p) : p_(p) {}
  std::uint32_t modulus() const { return p_; }

  static bool is_zero(Elem e) { return e == 0; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem inverse(Elem a) const {
    std::uint64_t base = a, result = 1, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }

  void normalize(SparseVector<Elem>& v) const {
    if (v.empty() || v.front().val == 1) return;
    const Elem inv = inverse(v.front().val);
    for (auto& t : v) t.val = mul(t.val, inv);
  }

  // r is monic at its leading column.
  void eliminate(SparseVector<Elem>& v, std::size_t pos, const SparseVector<Elem>& r,
                 SparseVector<Elem>& scratch) const {
    const std::uint64_t b = p_ - v[pos].val;  // subtract b * r == add (p - b) * r
    scratch.clear();
    scratch.reserve(v.size() + r.size());
    auto vi = v.begin();
    auto ri = r.begin();
    while (vi != v.end() || ri != r.end()) {
      if (ri == r.end() || (vi != v.end() && vi->col < ri->col)) {
        scratch.push_back(*vi++);
      } else if (vi == v.end() || ri->col < vi->col) {
        scratch.push_back({ri->col, static_cast<Elem>(b * ri->val % p_)});
        ++ri;
      } else {
        const Elem x = static_cast<Elem>((vi->val + b * ri->val) % p_);
        if (x != 0) scratch.push_back({vi->col, x});
        ++vi;
        ++ri;
      }
    }
    v.swap(scratch);
  }

 private:
  std::uint32_t p_ = 2;
};

/// Incrementally built row-echelon basis of a subspace of k^cols.
template <class Domain>
class Echelon {
 public:
  using Elem = typename Domain::Elem;
  using Vec = SparseVector<Elem>;
  static constexpr std::uint32_t kNoPivot = std::numeric_limits<std::uint32_t>::max();

  Echelon(Domain domain, std::size_t cols) : domain_(std::move(domain)), pivot_row_(cols, kNoPivot) {}

  const Domain& domain() const { return domain_; }
  std::size_t cols() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] != kNoPivot; }
  std::uint32_t pivot_row(std::uint32_t col) const { return pivot_row_[col]; }

  /// Reduces leading terms until the leading column is not a pivot. The
  /// result is empty exactly when v lies in the span.
  Vec reduce(Vec v) const {
    Vec scratch;
    reduce_in_place(v, scratch);
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the basis when it is independent. Returns whether it was.
  bool insert(Vec v) {
    reduce_in_place(v, scratch_);
    if (v.empty()) return false;
    domain_.normalize(v);
    pivot_row_[v.front().col] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(v));
    reduced_ = false;
    return true;
  }

  /// Brings the basis to reduced row echelon form: every pivot column is
  /// zero outside its own row.
  void back_substitute() {
    if (reduced_) return;
    std::vector<std::uint32_t> order(rows_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return rows_[a].front().col > rows_[b].front().col; });
    // Rows with larger pivots are fully reduced before they are used.
    for (std::uint32_t idx : order) {
      Vec& row = rows_[idx];
      std::size_t pos = 1;
      while (pos < row.size()) {
        const std::uint32_t c = row[pos].col;
        if (pivot_row_[c] == kNoPivot) {
          ++pos;
          continue;
        }
        domain_.eliminate(row, pos, rows_[pivot_row_[c]], scratch_);
        // Entries before c are untouched and the entry at c vanished.
        while (pos < row.size() && row[pos].col < c) ++pos;
        if (pos < row.size() && row[pos].col == c) ++pos;
      }
      domain_.normalize(row);
    }
    reduced_ = true;
  }

  /// Pivot columns in increasing order.
  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < pivot_row_.size(); ++c) {
      if (pivot_row_[c] != kNoPivot) out.push_back(c);
    }
    return out;
  }

 private:
  void reduce_in_place(Vec& v, Vec& scratch) const {
    while (!v.empty()) {
      const std::uint32_t c = v.front().col;
      if (pivot_row_[c] == kNoPivot) return;
      domain_.eliminate(v, 0, rows_[pivot_row_[c]], scratch);
    }
  }

  Domain domain_;
  std::vector<Vec> rows_;
  std::vector<std::uint32_t> pivot_row_;
  Vec scratch_;
  bool reduced_ = true;
};

/// Kernel basis of the matrix whose rows span `e` (which must be in reduced
/// form): one vector per free column, in increasing free-column order, with
/// support on that free column and on pivot columns. Integer vectors are
/// primitive with a positive free coordinate; prime-field vectors have free
/// coordinate 1.
template <class Domain>
std::vector<SparseVector<typename Domain::Elem>> kernel_basis(const Echelon<Domain>& e) {
  using Elem = typename Domain::Elem;
  const Domain& d = e.domain();
  const std::size_t cols = e.cols();
  // entries by free column: (row, value)
  std::vector<std::vector<std::pair<std::uint32_t, Elem>>> by_col(cols);
  for (std::uint32_t i = 0; i < e.rows().size(); ++i) {
    const auto& row = e.rows()[i];
    for (std::size_t k = 1; k < row.size(); ++k) by_col[row[k].col].push_back({i, row[k].val});
  }
  std::vector<SparseVector<Elem>> out;
  for (std::uint32_t f = 0; f < cols; ++f) {
    if (e.is_pivot(f)) continue;
    SparseVector<Elem> v;
    if constexpr (std::is_same_v<Domain, IntegerDomain>) {
      Integer scale = 1;
      for (const auto& [i, val] : by_col[f]) scale = Integer::lcm(scale, e.rows()[i].front().val);
      for (const auto& [i, val] : by_col[f]) {
        const auto& row = e.rows()[i];
        v.push_back({row.front().col, -(val * Integer::divexact(scale, row.front().val))});
      }
      v.push_back({f, scale});
    } else {
      for (const auto& [i, val] : by_col[f]) v.push_back({e.rows()[i].front().col, d.neg(val)});
      v.push_back({f, Elem{1}});
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    if constexpr (std::is_same_v<Domain, IntegerDomain>) {
      Integer g = 0;
      for (const auto& t : v) g = Integer::gcd(g, t.val);
      if (!g.is_one()) {
        for (auto& t : v) t.val = Integer::divexact(t.val, g);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace poincare
