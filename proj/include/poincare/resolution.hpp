#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poincare/algebra.hpp"
#include "poincare/dense_matrix.hpp"

namespace poincare {

/// A differential d: A^{source} -> A^{target}. Column j holds the image of
/// the j-th basis vector, an element of A^{target}.
class ModuleMap {
 public:
  ModuleMap(std::size_t source, std::size_t target, std::vector<AlgebraElement> entries);

  std::size_t source_rank() const noexcept { return source_; }
  std::size_t target_rank() const noexcept { return target_; }
  /// Row i, column j.
  const AlgebraElement& entry(std::size_t i, std::size_t j) const { return entries_[j * target_ + i]; }

  /// k-linear matrix of size length*target x length*source; column j*length+s
  /// is e_s times column j.
  DenseMatrix expansion(const LocalAlgebra& a) const;

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<AlgebraElement> entries_;
};

/// Outcome of the checks attached to one differential d_p.
struct StepCheck {
  std::size_t step = 0;
  /// dim ker d_{p-1} (for p = 1, dim m).
  std::size_t kernel_dim = 0;
  /// rank of d_p, when it was computed.
  std::optional<std::size_t> image_rank;
  /// "exact", "modular" (rank certificate over a prime field, which bounds
  /// the rational rank from below) or "skipped" (over the column budget).
  std::string exactness_method;
  bool exact = false;
  bool composition_zero = false;
  bool minimal = false;
};

struct ResolutionOptions {
  /// Largest k-expansion column count a step may build; unset means
  /// default_column_budget().
  std::optional<std::size_t> column_budget;
};

/// POINCARE_COLUMN_BUDGET when set to a positive integer, else 20000.
std::size_t default_column_budget();

namespace detail {
struct ResolutionData;
}

/// A partially built minimal free resolution of k over A.
class ResolutionState {
 public:
  /// The state holding d_1, whose entries are the cotangent basis elements.
  static ResolutionState start(const LocalAlgebra& a, ResolutionOptions options = {});

  /// Adds d_{p+1}. Throws ResourceLimit when the expansion of d_p is over
  /// budget and InternalError when minimality or exactness fails.
  ResolutionState step() const;

  std::size_t steps() const;
  const std::vector<std::uint64_t>& betti() const;
  const std::vector<StepCheck>& checks() const;
  ModuleMap differential(std::size_t p) const;
  const LocalAlgebra& algebra() const;

  /// Runs the exactness check for the last differential, which a following
  /// step would otherwise perform.
  ResolutionState certify_last() const;

 private:
  explicit ResolutionState(std::shared_ptr<const detail::ResolutionData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::ResolutionData> data_;
};

struct BettiResult {
  Field field;
  std::vector<std::uint64_t> betti;
  std::size_t steps = 0;
  bool minimal = false;
  std::vector<StepCheck> checks;
};

/// b_0..b_P, with every step checked for minimality, d o d = 0 and exactness.
BettiResult betti_numbers(const LocalAlgebra& a, std::size_t max_step, ResolutionOptions options = {});

}  // namespace poincare
