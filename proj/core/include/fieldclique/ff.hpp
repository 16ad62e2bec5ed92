#pragma once

// Exact arithmetic in GF(p^e) for odd p, backed by discrete exp/log tables.
//
// Elements are packed as base-p digit strings of their polynomial coefficients
// (constant coefficient least significant), so a field of order q uses the
// codes 0..q-1, code 0 is zero and code 1 is one.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fieldclique::ff {

/// Default upper bound on the field order; tables are O(q) memory.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 24;
/// Hard ceiling so element codes fit in 32 bits.
inline constexpr std::uint64_t kMaxFieldCap = std::uint64_t{1} << 31;

struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

struct FieldParams {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  /// Monic irreducible modulus, coefficients c0..ce.
  std::vector<std::uint32_t> modulus;
};

class FieldTable {
 public:
  /// Builds GF(p^e) with the lexicographically smallest monic irreducible
  /// modulus (compared from the constant term up) and the smallest-code
  /// primitive root.
  static FieldTable build(std::uint64_t p, std::uint32_t e, std::uint64_t cap = kDefaultFieldCap);

  const FieldParams& params() const noexcept { return params_; }
  std::uint64_t characteristic() const noexcept { return params_.p; }
  std::uint32_t degree() const noexcept { return params_.e; }
  std::uint32_t order() const noexcept { return q_; }
  Element generator() const noexcept { return g_; }

  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }

  bool contains(Element x) const noexcept { return x.code < q_; }

  /// g^k with k reduced modulo q-1.
  Element exp(std::uint64_t k) const noexcept { return Element{exp_[k % (q_ - 1)]}; }
  /// Discrete log base g; throws ZeroArgument for zero.
  std::uint32_t log(Element x) const;
  /// Discrete log without the zero check. x must be nonzero.
  std::uint32_t log_unchecked(Element x) const noexcept { return log_[x.code]; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  /// Throws DivisionByZero for zero.
  Element inv(Element a) const;
  /// a^k for any integer k; negative k requires a != 0.
  Element pow(Element a, std::int64_t k) const;
  /// x^(p^k).
  Element frobenius(Element x, std::uint32_t k) const;

  std::vector<std::uint32_t> digits(Element x) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  /// The unique subfield of order p^r, ascending by code. Throws NotADivisor
  /// unless r divides e.
  std::vector<Element> subfield_elements(std::uint32_t r) const;
  bool in_subfield(Element x, std::uint32_t r) const;

  /// Smallest m dividing e/r with x^(p^(r*m)) = x, i.e. F_{p^r}(x) = F_{p^(r*m)}.
  std::uint32_t degree_over_base(Element theta, std::uint32_t r) const;

 private:
  FieldTable() = default;

  void require_divisor(std::uint32_t r) const;

  FieldParams params_;
  std::uint32_t p32_ = 0;
  std::uint32_t q_ = 0;
  Element g_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

/// Shared immutable table; the form graphs and characters hold on to.
FieldPtr build_field(std::uint64_t p, std::uint32_t e, std::uint64_t cap = kDefaultFieldCap);

}  // namespace fieldclique::ff
