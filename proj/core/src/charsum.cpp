#include "fieldclique/charsum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fieldclique/arith.hpp"
#include "fieldclique/error.hpp"

namespace fieldclique::charsum {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

Character::Character(ff::FieldPtr field, std::uint32_t d) : field_(std::move(field)), d_(d) {
  if (d == 0 || (field_->order() - 1) % d != 0) {
    raise(Errc::kInvalidArgument, "character order " + std::to_string(d) +
                                      " does not divide " + std::to_string(field_->order() - 1));
  }
}

std::uint32_t Character::chi_class(Element x) const {
  if (x.code == 0) raise(Errc::kZeroArgument, "multiplicative characters are undefined at 0");
  return field_->log_unchecked(x) % d_;
}

std::complex<double> Character::value(Element x) const {
  const double angle = 2.0 * std::numbers::pi * chi_class(x) / d_;
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t RootOfUnitySum::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::complex<double> RootOfUnitySum::value() const {
  CompensatedSum re, im;
  const double d = static_cast<double>(counts_.size());
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / d;
    const double c = static_cast<double>(counts_[j]);
    re.add(c * std::cos(angle));
    im.add(c * std::sin(angle));
  }
  return {re.value(), im.value()};
}

RootOfUnitySum line_sum(const Character& chi, Element theta, std::span<const Element> base) {
  RootOfUnitySum sum(chi.order());
  const ff::FieldTable& f = chi.field();
  for (const Element& a : base) {
    const Element x = f.add(theta, a);
    if (x.code == 0) raise(Errc::kZeroEncountered, "theta + a vanished on the line");
    sum.add(f.log_unchecked(x) % chi.order());
  }
  return sum;
}

KatzReport katz_bound_check(const ff::FieldPtr& field, std::uint32_t r, std::uint32_t d) {
  const ff::FieldTable& f = *field;
  if (r == 0 || f.degree() % r != 0) raise(Errc::kNotADivisor, "r must divide the field degree");
  if (r == f.degree()) raise(Errc::kNoValidTheta, "no proper extension over the base subfield");
  if (d == 1) raise(Errc::kTrivialCharacter, "the character of order 1 is trivial");
  const Character chi(field, d);

  KatzReport report;
  report.p = f.characteristic();
  report.E = f.degree();
  report.r = r;
  report.d = d;
  const std::uint32_t n = f.degree() / r;
  report.bound = (n - 1) * std::sqrt(static_cast<double>(ipow(f.characteristic(), r)));

  const auto base = f.subfield_elements(r);
  bool found = false;
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    const Element theta{c};
    if (f.degree_over_base(theta, r) != n) continue;
    const double magnitude = line_sum(chi, theta, base).magnitude();
    const double ratio = magnitude / report.bound;
    ++report.thetas_checked;
    if (!found || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.max_magnitude = magnitude;
      report.worst_theta = theta;
      found = true;
    }
  }
  if (!found) raise(Errc::kNoValidTheta, "no theta generates the field over the base");
  return report;
}

RestrictedCharacter::RestrictedCharacter(const Character& parent, std::uint32_t subfield_degree)
    : parent_(parent), degree_(subfield_degree) {
  const ff::FieldTable& f = parent.field();
  if (subfield_degree == 0 || f.degree() % subfield_degree != 0) {
    raise(Errc::kNotASubfield, "no subfield of degree " + std::to_string(subfield_degree));
  }
  cofactor_ = (f.order() - 1) / (ipow(f.characteristic(), subfield_degree) - 1);
  order_ = static_cast<std::uint32_t>(parent.order() / std::gcd<std::uint64_t>(parent.order(), cofactor_));
}

std::uint32_t RestrictedCharacter::class_of_power(std::uint64_t k) const noexcept {
  const std::uint64_t g = parent_.order() / order_;
  const std::uint64_t reduced = (cofactor_ / g) % order_;
  return static_cast<std::uint32_t>((k % order_) * reduced % order_);
}

std::uint32_t RestrictedCharacter::chi_class(Element y) const {
  if (!parent_.field().in_subfield(y, degree_)) {
    raise(Errc::kNotASubfield, "element outside the subfield");
  }
  return parent_.chi_class(y);
}

RestrictedCharacter restrict_character(const Character& chi, std::uint32_t subfield_degree) {
  return RestrictedCharacter(chi, subfield_degree);
}

std::vector<std::complex<double>> roots_of_unity(std::uint32_t d,
                                                 std::span<const std::uint32_t> residues) {
  std::vector<std::complex<double>> out;
  out.reserve(residues.size());
  for (auto j : residues) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / d));
  return out;
}

EpsilonResult epsilon_star(std::uint32_t d, std::span<const std::uint32_t> residues) {
  if (d == 0) raise(Errc::kInvalidArgument, "d must be positive");
  const auto points = roots_of_unity(d, residues);
  return epsilon_star(points);
}

LemmaReport verify_lemma_bound(std::uint32_t d) {
  if (d % 2 != 0) raise(Errc::kOddD, "d must be even, got " + std::to_string(d));
  if (d < 4) raise(Errc::kInvalidArgument, "d must be at least 4, got " + std::to_string(d));
  std::vector<std::uint32_t> half(d / 2);
  std::iota(half.begin(), half.end(), 0u);
  LemmaReport report;
  report.d = d;
  report.epsilon_star = epsilon_star(d, half).epsilon_star;
  const double pi = std::numbers::pi;
  report.lower_bound = pi / d - pi / (static_cast<double>(d) * d);
  report.analytic = std::sin(pi / d);
  return report;
}

}  // namespace fieldclique::charsum
