#include "fieldclique/ff.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fieldclique/arith.hpp"
#include "fieldclique/error.hpp"
#include "poly.hpp"

namespace fieldclique::ff {
namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

detail::Poly to_poly(std::uint64_t code, std::uint64_t p, std::uint32_t e) {
  detail::Poly out(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    out[i] = code % p;
    code /= p;
  }
  detail::trim(out);
  return out;
}

std::uint64_t to_code(const detail::Poly& a, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

detail::Poly smallest_irreducible(std::uint64_t p, std::uint32_t e, std::uint64_t q) {
  // Candidate index idx encodes (c0, ..., c_{e-1}) with c0 most significant,
  // so ascending idx walks the constant-term-first lexicographic order.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    detail::Poly f(e + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    f[e] = 1;
    if (e > 1 && f[0] == 0) continue;
    if (detail::is_irreducible(f, p)) return f;
  }
  raise(Errc::kInvalidArgument, "no irreducible polynomial found");
}

// Multiplies cur (length e, reduced) by g (length e) modulo the monic f,
// in place, using scratch of length 2e-1.
void mul_in_place(std::vector<std::uint64_t>& cur, const std::vector<std::uint64_t>& g,
                  const std::vector<std::uint64_t>& f, std::uint64_t p,
                  std::vector<std::uint64_t>& scratch) {
  const std::size_t e = cur.size();
  std::fill(scratch.begin(), scratch.end(), 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (cur[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) scratch[i + j] = (scratch[i + j] + cur[i] * g[j]) % p;
  }
  for (std::size_t k = scratch.size(); k-- > e;) {
    const std::uint64_t c = scratch[k];
    if (c == 0) continue;
    const std::size_t shift = k - e;
    for (std::size_t i = 0; i < e; ++i) scratch[shift + i] = (scratch[shift + i] + (p - f[i]) * c) % p;
    scratch[k] = 0;
  }
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(e), cur.begin());
}

}  // namespace

FieldTable FieldTable::build(std::uint64_t p, std::uint32_t e, std::uint64_t cap) {
  if (p == 2) raise(Errc::kEvenP, "p must be an odd prime, got 2");
  if (!is_prime(p)) raise(Errc::kNonPrimeP, "p must be an odd prime, got " + std::to_string(p));
  if (e == 0) raise(Errc::kInvalidArgument, "extension degree must be >= 1");
  const std::uint64_t limit = std::min(cap, kMaxFieldCap);
  const auto q = checked_pow(p, e, limit);
  if (!q) {
    raise(Errc::kCapExceeded, std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds the field cap " + std::to_string(limit));
  }

  FieldTable t;
  t.params_.p = p;
  t.params_.e = e;
  t.p32_ = static_cast<std::uint32_t>(p);
  t.q_ = static_cast<std::uint32_t>(*q);

  const detail::Poly f = smallest_irreducible(p, e, *q);
  t.params_.modulus.assign(f.begin(), f.end());

  // Smallest code of multiplicative order q-1.
  const std::uint64_t group = *q - 1;
  const auto primes = distinct_prime_factors(group);
  std::uint64_t g_code = 0;
  for (std::uint64_t c = 1; c < *q && g_code == 0; ++c) {
    const detail::Poly cand = to_poly(c, p, e);
    bool generates = true;
    for (std::uint64_t l : primes) {
      if (detail::poly_powmod(cand, group / l, f, p) == detail::Poly{1}) {
        generates = false;
        break;
      }
    }
    if (generates) g_code = c;
  }
  if (g_code == 0) raise(Errc::kInvalidArgument, "no primitive root found");
  t.g_ = Element{static_cast<std::uint32_t>(g_code)};

  t.exp_.assign(group, 0);
  t.log_.assign(*q, kNoLog);
  std::vector<std::uint64_t> cur(e, 0), gen(e, 0), scratch(2 * e - 1, 0);
  cur[0] = 1;
  {
    auto gp = to_poly(g_code, p, e);
    std::copy(gp.begin(), gp.end(), gen.begin());
  }
  const std::vector<std::uint64_t> fmod(f.begin(), f.begin() + e);
  for (std::uint64_t k = 0; k < group; ++k) {
    detail::Poly trimmed = cur;
    detail::trim(trimmed);
    const auto code = static_cast<std::uint32_t>(to_code(trimmed, p));
    if (t.log_[code] != kNoLog) {
      raise(Errc::kInvalidArgument, "generator order check failed while building tables");
    }
    t.exp_[k] = code;
    t.log_[code] = static_cast<std::uint32_t>(k);
    mul_in_place(cur, gen, fmod, p, scratch);
  }
  return t;
}

FieldPtr build_field(std::uint64_t p, std::uint32_t e, std::uint64_t cap) {
  return std::make_shared<const FieldTable>(FieldTable::build(p, e, cap));
}

std::uint32_t FieldTable::log(Element x) const {
  if (x.code == 0) raise(Errc::kZeroArgument, "log of zero is undefined");
  return log_[x.code];
}

Element FieldTable::add(Element a, Element b) const noexcept {
  if (params_.e == 1) {
    const std::uint32_t s = a.code + b.code;
    return Element{s >= q_ ? s - q_ : s};
  }
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < params_.e; ++i) {
    std::uint32_t s = x % p32_ + y % p32_;
    if (s >= p32_) s -= p32_;
    out += s * place;
    place *= p32_;
    x /= p32_;
    y /= p32_;
  }
  return Element{out};
}

Element FieldTable::sub(Element a, Element b) const noexcept {
  if (params_.e == 1) {
    return Element{a.code >= b.code ? a.code - b.code : a.code + q_ - b.code};
  }
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < params_.e; ++i) {
    const std::uint32_t xd = x % p32_, yd = y % p32_;
    out += (xd >= yd ? xd - yd : xd + p32_ - yd) * place;
    place *= p32_;
    x /= p32_;
    y /= p32_;
  }
  return Element{out};
}

Element FieldTable::neg(Element a) const noexcept { return sub(zero(), a); }

Element FieldTable::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  std::uint64_t k = std::uint64_t{log_[a.code]} + log_[b.code];
  if (k >= q_ - 1) k -= q_ - 1;
  return Element{exp_[k]};
}

Element FieldTable::inv(Element a) const {
  if (a.code == 0) raise(Errc::kDivisionByZero, "inverse of zero");
  const std::uint32_t k = log_[a.code];
  return Element{exp_[k == 0 ? 0 : q_ - 1 - k]};
}

Element FieldTable::pow(Element a, std::int64_t k) const {
  if (a.code == 0) {
    if (k < 0) raise(Errc::kDivisionByZero, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  const auto group = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = k % group;
  if (r < 0) r += group;
  // log < 2^31 and r < 2^31, so the product fits in 64 bits.
  const std::uint64_t idx = std::uint64_t{log_[a.code]} * static_cast<std::uint64_t>(r);
  return Element{exp_[idx % static_cast<std::uint64_t>(group)]};
}

Element FieldTable::frobenius(Element x, std::uint32_t k) const {
  if (x.code == 0) return x;
  const std::uint64_t group = q_ - 1;
  const std::uint64_t shift = powmod(params_.p, k, group);
  const std::uint64_t idx = std::uint64_t{log_[x.code]} * shift % group;
  return Element{exp_[idx]};
}

std::vector<std::uint32_t> FieldTable::digits(Element x) const {
  std::vector<std::uint32_t> out(params_.e, 0);
  std::uint32_t c = x.code;
  for (auto& d : out) {
    d = c % p32_;
    c /= p32_;
  }
  return out;
}

Element FieldTable::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != params_.e) {
    raise(Errc::kInvalidArgument, "expected " + std::to_string(params_.e) + " digits");
  }
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p32_) raise(Errc::kInvalidArgument, "digit out of range");
    code = code * p32_ + digits[i];
  }
  return Element{code};
}

void FieldTable::require_divisor(std::uint32_t r) const {
  if (r == 0 || params_.e % r != 0) {
    raise(Errc::kNotADivisor,
          std::to_string(r) + " does not divide the extension degree " + std::to_string(params_.e));
  }
}

std::vector<Element> FieldTable::subfield_elements(std::uint32_t r) const {
  require_divisor(r);
  const std::uint64_t sub_order = ipow(params_.p, r);
  const std::uint64_t step = (q_ - 1) / (sub_order - 1);
  std::vector<Element> out;
  out.reserve(sub_order);
  out.push_back(zero());
  for (std::uint64_t k = 0; k < sub_order - 1; ++k) out.push_back(Element{exp_[k * step]});
  std::sort(out.begin(), out.end());
  return out;
}

bool FieldTable::in_subfield(Element x, std::uint32_t r) const {
  require_divisor(r);
  if (x.code == 0) return true;
  const std::uint64_t step = (q_ - 1) / (ipow(params_.p, r) - 1);
  return log_[x.code] % step == 0;
}

std::uint32_t FieldTable::degree_over_base(Element theta, std::uint32_t r) const {
  require_divisor(r);
  if (theta.code == 0) return 1;
  for (std::uint64_t m : divisors(params_.e / r)) {
    if (frobenius(theta, r * static_cast<std::uint32_t>(m)) == theta) {
      return static_cast<std::uint32_t>(m);
    }
  }
  return params_.e / r;
}

}  // namespace fieldclique::ff
