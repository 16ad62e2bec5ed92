#pragma once

// End-to-end checks of the subfield-clique maximality results.
//
// A case fixes a base field F_q (q = p^s), an extension degree n and a graph
// kind on GF(q^n). verify_case decides whether F_q is a maximal subfield
// clique and, if so, whether it is a maximal clique, and classifies the
// outcome against the hypothesis regime the case falls in.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieldclique/cayley.hpp"
#include "fieldclique/ff.hpp"

namespace fieldclique::verify {

using ff::Element;

struct CaseParams {
  std::uint64_t p = 0;
  std::uint32_t s = 1;
  std::uint32_t n = 2;
  cayley::GraphKind kind = cayley::GraphKind::paley(2);

  std::uint32_t d() const noexcept { return kind.d(); }
  std::uint64_t base_order() const;
  std::uint64_t full_order() const;
};

enum class Regime { kTheorem1, kTheorem2, kProposition, kBelowThreshold };
std::string_view to_string(Regime regime);

struct HypothesisRegime {
  Regime regime = Regime::kBelowThreshold;
  /// Lower-boundedness constant used for the classification (1 for Paley,
  /// pi/d - pi/d^2 for the Peisert theorem, epsilon* for the proposition).
  double epsilon = 0.0;
  /// q must exceed this for the regime to apply.
  double threshold = 0.0;
};

enum class Verdict { kConsistent, kViolation, kCounterexampleBelowThreshold, kVacuous };
std::string_view to_string(Verdict verdict);

struct TheoremReport {
  CaseParams params;
  std::vector<std::uint32_t> modulus;
  Element generator;
  HypothesisRegime regime;
  bool subfield_clique = false;
  bool maximal_subfield_clique = false;
  /// Unset when F_q is not a maximal subfield clique (nothing to scan).
  std::optional<bool> maximal_clique;
  std::vector<Element> witnesses;
  std::vector<Element> extended_clique;
  std::optional<std::size_t> extended_clique_size;
  std::optional<cayley::ExtensionStrategy> extension_method;
  Verdict verdict = Verdict::kVacuous;
};

struct VerifyOptions {
  std::uint64_t cap = ff::kDefaultFieldCap;
  /// Common neighbourhoods up to this size get the exact extension; larger
  /// ones fall back to greedy.
  std::size_t exact_budget = cayley::kDefaultExactBudget;
};

/// Throws NonPrimeP / EvenP / CapExceeded / DegenerateModulus / InvalidCase.
void validate_case(const CaseParams& params, std::uint64_t cap = ff::kDefaultFieldCap);

HypothesisRegime check_hypotheses(const CaseParams& params);

TheoremReport verify_case(const CaseParams& params, const VerifyOptions& options = {});
/// Same, reusing a prebuilt GF(p^(s*n)).
TheoremReport verify_case(const CaseParams& params, const ff::FieldPtr& field,
                          const VerifyOptions& options = {});

/// Largest r dividing s with d | (p^s - 1)/(p^r - 1), if any.
std::optional<std::uint32_t> conjecture_r(std::uint64_t p, std::uint32_t s, std::uint32_t d);

/// Runs the maximality scan for F_{p^r} inside GP(p^s, d) with r from
/// conjecture_r. Throws NoQualifyingR when no r qualifies.
TheoremReport verify_conjecture_case(std::uint64_t p, std::uint32_t s, std::uint32_t d,
                                     const VerifyOptions& options = {});

struct SweepConfig {
  std::uint64_t max_order = 0;
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 6;
  std::uint32_t d_min = 2;
  std::uint32_t d_max = UINT32_MAX;
  bool paley = true;
  bool peisert = false;
  /// Only base fields with q <= max_base.
  std::optional<std::uint64_t> max_base;
  /// Keep only cases whose regime is below_threshold.
  bool only_below_threshold = false;
  unsigned workers = 1;
  std::uint64_t cap = ff::kDefaultFieldCap;
  std::size_t exact_budget = cayley::kDefaultExactBudget;
};

/// Cases sorted by (p, s, n, d, kind). Throws CapExceeded when max_order is
/// above the cap.
std::vector<CaseParams> enumerate_cases(const SweepConfig& config);

struct SweepResult {
  std::vector<TheoremReport> reports;

  std::size_t violation_count() const;
};

SweepResult sweep(const SweepConfig& config);

struct CounterexampleScan {
  /// Maximal subfield cliques that are not maximal cliques, below threshold.
  std::vector<TheoremReport> counterexamples;
  /// The same situation inside a hypothesis regime.
  std::vector<TheoremReport> violations;
};

CounterexampleScan find_counterexamples(const SweepConfig& config);

}  // namespace fieldclique::verify
