#pragma once

// Multiplicative characters of GF(Q) and exact character sums.
//
// A character of order d is fixed by chi(g) = zeta_d = exp(2*pi*i/d), so
// chi(g^k) = zeta_d^(k mod d). Sums of character values are kept as integer
// counts per power of zeta_d; floating point only enters when a magnitude is
// requested.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fieldclique/ff.hpp"

namespace fieldclique::charsum {

using ff::Element;

class Character {
 public:
  /// d must divide Q - 1.
  Character(ff::FieldPtr field, std::uint32_t d);

  const ff::FieldTable& field() const noexcept { return *field_; }
  const ff::FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return d_; }
  bool is_trivial() const noexcept { return d_ == 1; }

  /// Residue j with chi(x) = zeta_d^j. Throws ZeroArgument for x = 0.
  std::uint32_t chi_class(Element x) const;
  std::complex<double> value(Element x) const;

 private:
  ff::FieldPtr field_;
  std::uint32_t d_;
};

class RootOfUnitySum {
 public:
  explicit RootOfUnitySum(std::uint32_t d) : counts_(d, 0) {}

  void add(std::uint32_t residue) { ++counts_[residue % counts_.size()]; }

  std::uint32_t d() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;
  /// Sum of counts[j] * zeta_d^j with compensated summation.
  std::complex<double> value() const;
  double magnitude() const { return std::abs(value()); }

 private:
  std::vector<std::uint64_t> counts_;
};

/// Sum of chi(theta + a) over a in base. Throws ZeroEncountered when some
/// theta + a vanishes.
RootOfUnitySum line_sum(const Character& chi, Element theta, std::span<const Element> base);

struct KatzReport {
  std::uint64_t p = 0;
  std::uint32_t E = 0;
  std::uint32_t r = 0;
  std::uint32_t d = 0;
  /// (E/r - 1) * sqrt(p^r).
  double bound = 0.0;
  double max_ratio = 0.0;
  double max_magnitude = 0.0;
  Element worst_theta;
  std::uint64_t thetas_checked = 0;

  bool within_bound(double tol = 1e-9) const { return max_ratio <= 1.0 + tol; }
};

/// Scans every theta with F_{p^r}(theta) = GF(p^E) and reports the largest
/// |sum_{a in F_{p^r}} chi(theta + a)| relative to (E/r - 1) sqrt(p^r).
KatzReport katz_bound_check(const ff::FieldPtr& field, std::uint32_t r, std::uint32_t d);

/// chi restricted to the subfield of degree subfield_degree.
class RestrictedCharacter {
 public:
  RestrictedCharacter(const Character& parent, std::uint32_t subfield_degree);

  std::uint32_t subfield_degree() const noexcept { return degree_; }
  /// (Q - 1)/(p^f - 1); the subfield's primitive root is g^cofactor.
  std::uint64_t cofactor() const noexcept { return cofactor_; }
  /// Order of the restriction: d / gcd(d, cofactor).
  std::uint32_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Residue mod order() of chi on h^k where h = g^cofactor.
  std::uint32_t class_of_power(std::uint64_t k) const noexcept;
  /// Residue mod d of chi on y, which must be a nonzero subfield element.
  std::uint32_t chi_class(Element y) const;

 private:
  Character parent_;
  std::uint32_t degree_;
  std::uint64_t cofactor_;
  std::uint32_t order_;
};

/// Throws NotASubfield unless subfield_degree divides the field degree.
RestrictedCharacter restrict_character(const Character& chi, std::uint32_t subfield_degree);

struct EpsilonResult {
  double epsilon_star = 0.0;
  /// Convex weights over the input points whose combination is the closest
  /// point of the hull to the origin.
  std::vector<double> weights;
};

/// Distance from the origin to the convex hull of the points: the largest
/// eps such that the set is eps-lower bounded.
EpsilonResult epsilon_star(std::span<const std::complex<double>> points);

/// Points zeta_d^j for j in residues.
std::vector<std::complex<double>> roots_of_unity(std::uint32_t d,
                                                 std::span<const std::uint32_t> residues);
EpsilonResult epsilon_star(std::uint32_t d, std::span<const std::uint32_t> residues);

struct LemmaReport {
  std::uint32_t d = 0;
  double epsilon_star = 0.0;
  /// pi/d - pi/d^2.
  double lower_bound = 0.0;
  /// sin(pi/d), the chord distance for the half-circle set.
  double analytic = 0.0;

  bool holds(double tol = 1e-9) const {
    return epsilon_star + tol >= lower_bound && std::abs(epsilon_star - analytic) <= tol;
  }
};

/// epsilon* of {zeta_d^j : 0 <= j < d/2} against pi/d - pi/d^2 and sin(pi/d).
/// Throws OddD for odd d, InvalidArgument for d < 4.
LemmaReport verify_lemma_bound(std::uint32_t d);

}  // namespace fieldclique::charsum
