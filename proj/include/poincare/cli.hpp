#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poincare/families.hpp"
#include "poincare/json_io.hpp"
#include "poincare/resolution.hpp"
#include "poincare/series.hpp"

namespace poincare {

/// One distinct catalog function and how it compares with the Betti prefix.
struct CandidateVerdict {
  std::vector<std::string> labels;
  RationalFunction formula = RationalFunction::one();
  std::vector<Integer> expansion;
  bool match = false;
  /// First index where expansion and Betti numbers differ.
  std::optional<std::size_t> first_divergence;
};

struct VerificationReport {
  std::string source;
  std::size_t n = 0;
  Field field;
  std::vector<std::uint64_t> betti;
  /// b_2 - C(n,2).
  Integer epsilon_from_betti = 0;
  std::size_t epsilon_from_generators = 0;
  bool epsilon_agree = false;
  std::vector<CandidateVerdict> candidates;
  std::vector<std::string> notes;
  std::optional<std::string> adjudication;

  bool any_match() const;
  /// Some candidate matches and both ways of reading off eps agree.
  bool success() const;
  /// Labels of the matching candidates.
  std::vector<std::string> matched_labels() const;
};

/// Builds the family algebra over `field`, resolves it to `max_step` and
/// compares with every applicable catalog entry. For the H = (1,n,3,1)
/// families the printed form and the pipeline form (with the base measured
/// on the same family at n = 3) are both evaluated.
VerificationReport verify_family(const FamilySpec& spec, std::size_t max_step, ResolutionOptions options = {});

/// Same for an arbitrary presentation; the pipeline base eps0 is read off
/// the generator count.
VerificationReport verify_presentation(const IdealPresentation& p, std::size_t max_step,
                                       ResolutionOptions options = {}, const std::string& source = "file");

Json report_to_json(const VerificationReport& r);

struct CommandResult {
  /// 0 success, 1 verification failure, 2 input error, 3 resource limit or
  /// internal failure.
  int status = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult execute(const std::vector<std::string>& args);

}  // namespace poincare
