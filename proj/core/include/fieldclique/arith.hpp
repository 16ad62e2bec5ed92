#pragma once

// Integer helpers shared by the field, graph and sweep code.

#include <cstdint>
#include <optional>
#include <vector>

namespace fieldclique {

/// Largest argument accepted by factorize().
inline constexpr std::uint64_t kFactorizeLimit = std::uint64_t{1} << 48;

bool is_prime(std::uint64_t n);

/// Prime factors of m with multiplicity, ascending. factorize(1) is empty.
std::vector<std::uint64_t> factorize(std::uint64_t m);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t m);

/// All positive divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// base^exp, or nullopt when the result would exceed limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t limit = UINT64_MAX);

/// base^exp; throws InvalidArgument on overflow.
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Odd primes p <= hi, ascending.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t hi);

}  // namespace fieldclique
