#pragma once

// Dense polynomials over F_p, coefficients stored constant term first. Only
// used while building field tables; all later arithmetic goes through exp/log.

#include <cstdint>
#include <vector>

namespace fieldclique::detail {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
bool is_zero(const Poly& a);
Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly poly_powmod(const Poly& base, std::uint64_t k, const Poly& f, std::uint64_t p);
Poly poly_gcd(Poly a, Poly b, std::uint64_t p);

bool has_root(const Poly& f, std::uint64_t p);

/// Rabin's test: f of degree e is irreducible iff x^(p^e) = x mod f and
/// gcd(x^(p^(e/l)) - x, f) = 1 for every prime l dividing e.
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace fieldclique::detail
