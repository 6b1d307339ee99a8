#include "poincare/resolution.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <string>
#include <variant>

#include "poincare/echelon.hpp"
#include "poincare/error.hpp"

namespace poincare {

std::size_t default_column_budget() {
  if (const char* env = std::getenv("POINCARE_COLUMN_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

ModuleMap::ModuleMap(std::size_t source, std::size_t target, std::vector<AlgebraElement> entries)
    : source_(source), target_(target), entries_(std::move(entries)) {
  if (entries_.size() != source * target) throw InputError("module map entry count does not match its shape");
}

DenseMatrix ModuleMap::expansion(const LocalAlgebra& a) const {
  const std::size_t len = a.length();
  DenseMatrix m(a.field(), len * target_, len * source_);
  for (std::size_t j = 0; j < source_; ++j) {
    for (std::size_t s = 0; s < len; ++s) {
      const AlgebraElement es = a.basis_element(s);
      for (std::size_t i = 0; i < target_; ++i) {
        const AlgebraElement v = a.multiply(es, entry(i, j));
        for (std::size_t r = 0; r < len; ++r) m(i * len + r, j * len + s) = v[r];
      }
    }
  }
  return m;
}

namespace detail {

// Structure constants of A in an elimination domain. mult[s][t] is e_s*e_t;
// over Q the whole table carries one common positive scale factor, which
// leaves every span and kernel unchanged.
template <class D>
struct Structure {
  using Elem = typename D::Elem;
  using Vec = SparseVector<Elem>;

  D domain;
  std::size_t length = 0;
  std::vector<int> filtration;
  std::vector<std::size_t> cotangent;
  std::vector<std::vector<Vec>> mult;

  // e_s * v for v in A^b, blockwise.
  Vec act(std::size_t s, const Vec& v) const {
    Vec out;
    std::vector<Elem> acc(length, Elem{});
    std::size_t k = 0;
    while (k < v.size()) {
      const std::size_t block = v[k].col / length;
      std::fill(acc.begin(), acc.end(), Elem{});
      for (; k < v.size() && v[k].col / length == block; ++k) {
        for (const auto& m : mult[s][v[k].col % length]) {
          acc[m.col] = domain.add(acc[m.col], domain.mul(v[k].val, m.val));
        }
      }
      for (std::size_t r = 0; r < length; ++r) {
        if (!D::is_zero(acc[r])) out.push_back({static_cast<std::uint32_t>(block * length + r), acc[r]});
      }
    }
    return out;
  }
};

template <class D>
struct Differentials {
  using Vec = typename Structure<D>::Vec;
  std::shared_ptr<const Structure<D>> structure;
  // gens[p-1] are the columns of d_p, vectors in k^{length * b_{p-1}}.
  std::vector<std::shared_ptr<const std::vector<Vec>>> gens;
};

struct ResolutionData {
  std::shared_ptr<const LocalAlgebra> algebra;
  std::size_t budget = 0;
  std::variant<Differentials<IntegerDomain>, Differentials<PrimeDomain>> diffs;
  std::vector<std::uint64_t> betti;
  std::vector<StepCheck> checks;
};

}  // namespace detail

namespace {

using detail::Differentials;
using detail::ResolutionData;
using detail::Structure;

constexpr std::uint32_t kCertificatePrime = 2147483647u;

template <class D>
typename D::Elem to_domain(const D& d, const Scalar& s, const mpz_class& scale) {
  if constexpr (std::is_same_v<D, IntegerDomain>) {
    const mpq_class v = s.rational() * scale;
    return Integer(v.get_num());
  } else {
    (void)d;
    (void)scale;
    return s.residue();
  }
}

template <class D>
std::shared_ptr<const Structure<D>> make_structure(const LocalAlgebra& a, D domain) {
  auto st = std::make_shared<Structure<D>>();
  st->domain = std::move(domain);
  st->length = a.length();
  st->filtration = a.filtration();
  st->cotangent = a.cotangent_basis();
  mpz_class scale = 1;
  if constexpr (std::is_same_v<D, IntegerDomain>) {
    for (std::size_t i = 0; i < a.length(); ++i) {
      for (std::size_t j = 0; j < a.length(); ++j) {
        for (const Scalar& c : a.product(i, j)) {
          if (!c.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rational().get_den_mpz_t());
        }
      }
    }
  }
  st->mult.assign(a.length(), std::vector<typename Structure<D>::Vec>(a.length()));
  for (std::size_t i = 0; i < a.length(); ++i) {
    for (std::size_t j = 0; j < a.length(); ++j) {
      const AlgebraElement& p = a.product(i, j);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) st->mult[i][j].push_back({static_cast<std::uint32_t>(k), to_domain(st->domain, p[k], scale)});
      }
    }
  }
  return st;
}

template <class D>
AlgebraElement block_element(Field f, const SparseVector<typename D::Elem>& v, std::size_t block, std::size_t len) {
  AlgebraElement out(len, Scalar::zero(f));
  for (const auto& t : v) {
    if (t.col / len != block) continue;
    if constexpr (std::is_same_v<D, IntegerDomain>) {
      out[t.col % len] = Scalar(f, t.val);
    } else {
      out[t.col % len] = Scalar(f, Integer(static_cast<long>(t.val)));
    }
  }
  return out;
}

// Columns of the expansion of a differential, j*length + s = e_s * g_j.
template <class D>
std::vector<typename Structure<D>::Vec> expansion_columns(const Structure<D>& st,
                                                          const std::vector<typename Structure<D>::Vec>& gens) {
  std::vector<typename Structure<D>::Vec> cols;
  cols.reserve(gens.size() * st.length);
  for (const auto& g : gens) {
    for (std::size_t s = 0; s < st.length; ++s) cols.push_back(st.act(s, g));
  }
  return cols;
}

template <class D>
bool composition_vanishes(const Structure<D>& st, const std::vector<typename Structure<D>::Vec>& cols,
                          std::size_t rows, const typename Structure<D>::Vec& g) {
  using Elem = typename D::Elem;
  std::vector<Elem> acc(rows, Elem{});
  for (const auto& t : g) {
    for (const auto& c : cols[t.col]) acc[c.col] = st.domain.add(acc[c.col], st.domain.mul(t.val, c.val));
  }
  return std::all_of(acc.begin(), acc.end(), [](const Elem& e) { return D::is_zero(e); });
}

// Rank of the expansion of the differential with columns `gens`, stopping
// once `target` is reached. Products by the unit come first so the
// generators themselves are tried before their multiples.
template <class D>
std::size_t streamed_rank(const Structure<D>& st, const std::vector<typename Structure<D>::Vec>& gens,
                          std::size_t rows, std::size_t target) {
  Echelon<D> e(st.domain, rows);
  for (std::size_t s = 0; s < st.length && e.rank() < target; ++s) {
    for (std::size_t j = 0; j < gens.size() && e.rank() < target; ++j) e.insert(st.act(s, gens[j]));
  }
  return e.rank();
}

std::shared_ptr<const Structure<PrimeDomain>> reduce_structure(const Structure<IntegerDomain>& st, std::uint32_t q) {
  auto out = std::make_shared<Structure<PrimeDomain>>();
  out->domain = PrimeDomain(q);
  out->length = st.length;
  out->filtration = st.filtration;
  out->cotangent = st.cotangent;
  out->mult.assign(st.length, std::vector<SparseVector<std::uint32_t>>(st.length));
  for (std::size_t i = 0; i < st.length; ++i) {
    for (std::size_t j = 0; j < st.length; ++j) {
      for (const auto& t : st.mult[i][j]) {
        const std::uint32_t r = Integer::mod(t.val, q);
        if (r) out->mult[i][j].push_back({t.col, r});
      }
    }
  }
  return out;
}

SparseVector<std::uint32_t> reduce_vector(const SparseVector<Integer>& v, std::uint32_t q) {
  SparseVector<std::uint32_t> out;
  for (const auto& t : v) {
    const std::uint32_t r = Integer::mod(t.val, q);
    if (r) out.push_back({t.col, r});
  }
  return out;
}

template <class D>
std::size_t certified_rank(const Structure<D>& st, const std::vector<typename Structure<D>::Vec>& gens,
                           std::size_t rows, std::size_t target, std::string& method) {
  if constexpr (std::is_same_v<D, IntegerDomain>) {
    const auto reduced = reduce_structure(st, kCertificatePrime);
    std::vector<SparseVector<std::uint32_t>> rg;
    rg.reserve(gens.size());
    for (const auto& g : gens) rg.push_back(reduce_vector(g, kCertificatePrime));
    const std::size_t r = streamed_rank(*reduced, rg, rows, target);
    if (r == target) {
      method = "modular";
      return r;
    }
  }
  method = "exact";
  return streamed_rank(st, gens, rows, target);
}

std::vector<std::uint64_t> partial(const ResolutionData& data) { return data.betti; }

template <class D>
std::shared_ptr<ResolutionData> advance(const ResolutionData& data, const Differentials<D>& diffs) {
  using Vec = typename Structure<D>::Vec;
  const Structure<D>& st = *diffs.structure;
  const std::size_t len = st.length;
  const std::size_t p = diffs.gens.size();
  const auto& gens = *diffs.gens.back();
  const std::size_t bp = gens.size();
  const std::size_t rows = len * data.betti[p - 1];
  const std::size_t ncols = len * bp;

  auto next = std::make_shared<ResolutionData>(data);
  Differentials<D> nd = diffs;
  StepCheck& prev = next->checks.back();

  if (bp == 0) {
    prev.image_rank = 0;
    prev.exact = prev.kernel_dim == 0;
    prev.exactness_method = "exact";
    if (!prev.exact) throw InternalError("resolution is not exact at step " + std::to_string(p));
    nd.gens.push_back(std::make_shared<const std::vector<Vec>>());
    next->diffs = std::move(nd);
    next->betti.push_back(0);
    next->checks.push_back(StepCheck{p + 1, 0, std::nullopt, "pending", false, true, true});
    return next;
  }
  if (ncols > data.budget) {
    throw ResourceLimit("step " + std::to_string(p + 1) + " needs a k-expansion with " + std::to_string(ncols) +
                            " columns, over the budget of " + std::to_string(data.budget),
                        partial(data));
  }

  const std::vector<Vec> cols = expansion_columns(st, gens);
  // Equations of d_p: the rows of its expansion.
  std::vector<Vec> eq(rows);
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : cols[c]) eq[t.col].push_back({c, t.val});
  }
  Echelon<D> ech(st.domain, ncols);
  for (auto& r : eq) {
    if (!r.empty()) ech.insert(std::move(r));
  }
  const std::size_t rank = ech.rank();
  prev.image_rank = rank;
  prev.exactness_method = "exact";
  prev.exact = rank == prev.kernel_dim;
  if (!prev.exact) {
    throw InternalError("resolution is not exact at step " + std::to_string(p) + ": rank " + std::to_string(rank) +
                        " against kernel dimension " + std::to_string(prev.kernel_dim));
  }
  ech.back_substitute();
  std::vector<Vec> kernel = kernel_basis(ech);
  const std::size_t kdim = kernel.size();

  Echelon<D> span(st.domain, ncols);
  for (const auto& v : kernel) {
    for (std::size_t c : st.cotangent) span.insert(st.act(c, v));
  }
  const std::size_t target = kdim - span.rank();

  std::vector<std::size_t> order(kdim);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](const Vec& v) {
    int f = INT_MAX;
    for (const auto& t : v) f = std::min(f, st.filtration[t.col % len]);
    return std::pair<int, std::uint32_t>(f, v.front().col);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(kernel[a]) < key(kernel[b]); });
  auto chosen = std::make_shared<std::vector<Vec>>();
  for (std::size_t idx : order) {
    if (chosen->size() == target) break;
    if (span.insert(kernel[idx])) chosen->push_back(std::move(kernel[idx]));
  }
  if (chosen->size() != target) throw InternalError("complement extraction found too few generators");

  bool minimal = true;
  bool zero = true;
  for (const auto& g : *chosen) {
    for (const auto& t : g) minimal &= st.filtration[t.col % len] > 0;
    zero &= composition_vanishes(st, cols, rows, g);
  }
  if (!minimal) throw InternalError("a kernel generator has a unit coordinate");
  if (!zero) throw InternalError("a kernel generator is not annihilated by the previous differential");

  nd.gens.push_back(std::move(chosen));
  next->diffs = std::move(nd);
  next->betti.push_back(target);
  next->checks.push_back(StepCheck{p + 1, kdim, std::nullopt, "pending", false, zero, minimal});
  return next;
}

template <class D>
std::shared_ptr<ResolutionData> certify(const ResolutionData& data, const Differentials<D>& diffs) {
  auto next = std::make_shared<ResolutionData>(data);
  StepCheck& last = next->checks.back();
  if (last.exactness_method != "pending") return next;
  const std::size_t p = diffs.gens.size();
  const auto& gens = *diffs.gens.back();
  const std::size_t rows = diffs.structure->length * data.betti[p - 1];
  std::string method;
  const std::size_t r = gens.empty() ? 0 : certified_rank(*diffs.structure, gens, rows, last.kernel_dim, method);
  last.image_rank = r;
  last.exactness_method = gens.empty() ? "exact" : method;
  last.exact = r == last.kernel_dim;
  if (!last.exact) throw InternalError("resolution is not exact at step " + std::to_string(p));
  return next;
}

}  // namespace

ResolutionState ResolutionState::start(const LocalAlgebra& a, ResolutionOptions options) {
  auto data = std::make_shared<ResolutionData>();
  data->algebra = std::make_shared<const LocalAlgebra>(a);
  data->budget = options.column_budget.value_or(default_column_budget());
  const std::vector<std::size_t> cot = a.cotangent_basis();
  auto init = [&](auto domain) {
    using D = decltype(domain);
    Differentials<D> d;
    d.structure = make_structure(a, std::move(domain));
    auto gens = std::make_shared<std::vector<SparseVector<typename D::Elem>>>();
    for (std::size_t c : cot) gens->push_back({{static_cast<std::uint32_t>(c), typename D::Elem{1}}});
    d.gens.push_back(std::move(gens));
    data->diffs = std::move(d);
  };
  if (a.field().is_rational()) {
    init(IntegerDomain{});
  } else {
    init(PrimeDomain(a.field().characteristic()));
  }
  data->betti = {1, cot.size()};
  data->checks.push_back(StepCheck{1, a.length() - 1, std::nullopt, "pending", false, true, true});
  return ResolutionState(std::move(data));
}

ResolutionState ResolutionState::step() const {
  return ResolutionState(std::visit([&](const auto& d) { return advance(*data_, d); }, data_->diffs));
}

ResolutionState ResolutionState::certify_last() const {
  return ResolutionState(std::visit([&](const auto& d) { return certify(*data_, d); }, data_->diffs));
}

std::size_t ResolutionState::steps() const { return data_->betti.size() - 1; }
const std::vector<std::uint64_t>& ResolutionState::betti() const { return data_->betti; }
const std::vector<StepCheck>& ResolutionState::checks() const { return data_->checks; }
const LocalAlgebra& ResolutionState::algebra() const { return *data_->algebra; }

ModuleMap ResolutionState::differential(std::size_t p) const {
  if (p < 1 || p > steps()) throw InputError("no differential d_" + std::to_string(p));
  return std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d.structure->domain)>;
        const auto& gens = *d.gens[p - 1];
        const std::size_t len = data_->algebra->length();
        const std::size_t target = data_->betti[p - 1];
        std::vector<AlgebraElement> entries;
        entries.reserve(gens.size() * target);
        for (const auto& g : gens) {
          for (std::size_t i = 0; i < target; ++i) {
            entries.push_back(block_element<D>(data_->algebra->field(), g, i, len));
          }
        }
        return ModuleMap(gens.size(), target, std::move(entries));
      },
      data_->diffs);
}

BettiResult betti_numbers(const LocalAlgebra& a, std::size_t max_step, ResolutionOptions options) {
  BettiResult out;
  out.field = a.field();
  out.steps = max_step;
  if (max_step == 0) {
    out.betti = {1};
    out.minimal = true;
    return out;
  }
  ResolutionState st = ResolutionState::start(a, options);
  while (st.steps() < max_step) st = st.step();
  st = st.certify_last();
  out.betti = st.betti();
  out.checks = st.checks();
  out.minimal = std::all_of(out.checks.begin(), out.checks.end(), [](const StepCheck& c) { return c.minimal; });
  return out;
}

}  // namespace poincare
