#include "fieldclique/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fieldclique/arith.hpp"
#include "fieldclique/charsum.hpp"
#include "fieldclique/error.hpp"

namespace fieldclique::verify {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kTheorem1: return "theorem1";
    case Regime::kTheorem2: return "theorem2";
    case Regime::kProposition: return "proposition";
    case Regime::kBelowThreshold: return "below_threshold";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConsistent: return "consistent";
    case Verdict::kViolation: return "VIOLATION";
    case Verdict::kCounterexampleBelowThreshold: return "counterexample_below_threshold";
    case Verdict::kVacuous: return "vacuous";
  }
  return "unknown";
}

std::uint64_t CaseParams::base_order() const { return ipow(p, s); }

std::uint64_t CaseParams::full_order() const { return ipow(p, s * n); }

void validate_case(const CaseParams& params, std::uint64_t cap) {
  if (params.p == 2) raise(Errc::kEvenP, "p must be an odd prime, got 2");
  if (!is_prime(params.p)) {
    raise(Errc::kNonPrimeP, "p must be an odd prime, got " + std::to_string(params.p));
  }
  if (params.s == 0) raise(Errc::kInvalidCase, "base exponent s must be >= 1");
  if (params.n < 2) raise(Errc::kInvalidCase, "extension degree n must be >= 2");
  if (params.kind.family() == cayley::GraphFamily::kGeneralizedPeisert && params.d() < 4) {
    raise(Errc::kInvalidCase, "Peisert cases need an even d >= 4");
  }
  const auto order = checked_pow(params.p, params.s * params.n, std::min(cap, ff::kMaxFieldCap));
  if (!order) {
    raise(Errc::kCapExceeded, "q^n = " + std::to_string(params.p) + "^" +
                                  std::to_string(params.s * params.n) + " exceeds the field cap");
  }
  if ((*order - 1) % (2 * std::uint64_t{params.d()}) != 0) {
    raise(Errc::kDegenerateModulus,
          "q^n = " + std::to_string(*order) + " is not 1 mod 2d = " + std::to_string(2 * params.d()));
  }
}

HypothesisRegime check_hypotheses(const CaseParams& params) {
  if (params.s == 0 || params.n < 2) raise(Errc::kInvalidCase, "need s >= 1 and n >= 2");
  const auto q_exact = checked_pow(params.p, params.s);
  if (!q_exact) raise(Errc::kInvalidCase, "base field order overflows");
  const std::uint64_t n1 = params.n - 1;
  const double q = static_cast<double>(*q_exact);
  const double d = params.d();
  const double pi = std::numbers::pi;

  switch (params.kind.family()) {
    case cayley::GraphFamily::kGeneralizedPaley:
      if (*q_exact > n1 * n1) {
        return {Regime::kTheorem1, 1.0, static_cast<double>(n1 * n1)};
      }
      break;
    case cayley::GraphFamily::kGeneralizedPeisert: {
      const double threshold = static_cast<double>(n1 * n1) * d * d * d * d /
                               (pi * pi * (d - 1) * (d - 1));
      if (q > threshold) return {Regime::kTheorem2, pi / d - pi / (d * d), threshold};
      break;
    }
    case cayley::GraphFamily::kResidueClass:
      break;
  }

  // The general criterion needs the graph to contain GP(q^n, d), i.e. 0 in J.
  if (!params.kind.contains_paley()) {
    return {Regime::kBelowThreshold, 0.0, std::numeric_limits<double>::infinity()};
  }
  const double eps = charsum::epsilon_star(params.d(), params.kind.residues()).epsilon_star;
  if (eps <= 0.0) {
    return {Regime::kBelowThreshold, 0.0, std::numeric_limits<double>::infinity()};
  }
  const double threshold = static_cast<double>(n1 * n1) / (eps * eps);
  if (q > threshold) return {Regime::kProposition, eps, threshold};
  return {Regime::kBelowThreshold, eps, threshold};
}

TheoremReport verify_case(const CaseParams& params, const VerifyOptions& options) {
  validate_case(params, options.cap);
  return verify_case(params, ff::build_field(params.p, params.s * params.n, options.cap), options);
}

TheoremReport verify_case(const CaseParams& params, const ff::FieldPtr& field,
                          const VerifyOptions& options) {
  validate_case(params, options.cap);
  if (field->characteristic() != params.p || field->degree() != params.s * params.n) {
    raise(Errc::kInvalidArgument, "field table does not match the case");
  }
  const cayley::CayleyGraph graph(field, params.kind);

  TheoremReport report;
  report.params = params;
  report.modulus = field->params().modulus;
  report.generator = field->generator();
  report.regime = check_hypotheses(params);
  report.subfield_clique = graph.subfield_is_clique(params.s);
  if (report.subfield_clique) {
    report.maximal_subfield_clique = graph.is_maximal_subfield_clique(params.s);
  }

  if (report.maximal_subfield_clique) {
    const auto base = field->subfield_elements(params.s);
    report.witnesses = graph.common_neighbors(base);
    report.maximal_clique = report.witnesses.empty();
    if (!report.witnesses.empty()) {
      const auto strategy = report.witnesses.size() <= options.exact_budget
                                ? cayley::ExtensionStrategy::kExact
                                : cayley::ExtensionStrategy::kGreedy;
      auto ext = graph.extend_to_maximal_clique(base, strategy, options.exact_budget);
      report.extended_clique_size = ext.clique.size();
      report.extended_clique = std::move(ext.clique);
      report.extension_method = strategy;
    }
  }

  if (!report.maximal_subfield_clique) {
    report.verdict = Verdict::kVacuous;
  } else if (*report.maximal_clique) {
    report.verdict = Verdict::kConsistent;
  } else if (report.regime.regime == Regime::kBelowThreshold) {
    report.verdict = Verdict::kCounterexampleBelowThreshold;
  } else {
    report.verdict = Verdict::kViolation;
  }
  return report;
}

std::optional<std::uint32_t> conjecture_r(std::uint64_t p, std::uint32_t s, std::uint32_t d) {
  if (s == 0 || d == 0) raise(Errc::kInvalidArgument, "need s >= 1 and d >= 1");
  const std::uint64_t q = ipow(p, s);
  const auto divs = divisors(s);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::uint64_t quotient = (q - 1) / (ipow(p, static_cast<std::uint32_t>(*it)) - 1);
    if (quotient % d == 0) return static_cast<std::uint32_t>(*it);
  }
  return std::nullopt;
}

TheoremReport verify_conjecture_case(std::uint64_t p, std::uint32_t s, std::uint32_t d,
                                     const VerifyOptions& options) {
  if (p == 2) raise(Errc::kEvenP, "p must be an odd prime, got 2");
  if (!is_prime(p)) raise(Errc::kNonPrimeP, "p must be an odd prime, got " + std::to_string(p));
  const auto q = checked_pow(p, s, std::min(options.cap, ff::kMaxFieldCap));
  if (!q) raise(Errc::kCapExceeded, "p^s exceeds the field cap");
  if (d < 2 || (*q - 1) % (2 * std::uint64_t{d}) != 0) {
    raise(Errc::kDegenerateModulus, std::to_string(*q) + " is not 1 mod 2d");
  }
  const auto r = conjecture_r(p, s, d);
  if (!r) {
    raise(Errc::kNoQualifyingR,
          "no r with d | (q-1)/(p^r-1) for q = " + std::to_string(*q) + ", d = " + std::to_string(d));
  }
  CaseParams params{p, *r, s / *r, cayley::GraphKind::paley(d)};
  return verify_case(params, options);
}

}  // namespace fieldclique::verify
