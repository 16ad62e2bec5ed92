#include "fieldclique/arith.hpp"

#include <algorithm>

#include "fieldclique/error.hpp"

namespace fieldclique {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t m) {
  if (m == 0 || m > kFactorizeLimit) {
    raise(Errc::kInvalidArgument, "factorize expects 1 <= m <= 2^48, got " + std::to_string(m));
  }
  std::vector<std::uint64_t> out;
  while (m % 2 == 0) {
    out.push_back(2);
    m /= 2;
  }
  for (std::uint64_t f = 3; f * f <= m; f += 2) {
    while (m % f == 0) {
      out.push_back(f);
      m /= f;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m) {
  auto f = factorize(m);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out{1};
  auto f = factorize(m);
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (std::size_t k = i; k < j; ++k) {
      pk *= f[i];
      for (std::size_t t = 0; t < existing; ++t) out.push_back(out[t] * pk);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  auto r = checked_pow(base, exp);
  if (!r) {
    raise(Errc::kInvalidArgument,
          std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
  }
  return *r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1 % mod;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 3) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 3; i <= hi; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += 2 * i) composite[j] = true;
  }
  return out;
}

}  // namespace fieldclique
