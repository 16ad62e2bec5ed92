#include "poly.hpp"

#include <algorithm>

#include "fieldclique/arith.hpp"

namespace fieldclique::detail {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  Poly g = f;
  trim(g);
  const std::size_t df = g.size() - 1;
  const std::uint64_t lead_inv = powmod(g.back(), p - 2, p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - c * g[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(const Poly& base, std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly acc = poly_mod(Poly{1}, f, p);
  Poly b = poly_mod(base, f, p);
  while (k > 0) {
    if (k & 1) acc = poly_mulmod(acc, b, f, p);
    k >>= 1;
    if (k > 0) b = poly_mulmod(b, b, f, p);
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

bool has_root(const Poly& f, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const auto e = static_cast<std::uint32_t>(g.size() - 1);
  if (e == 1) return true;
  if (has_root(g, p)) return false;

  const Poly x{0, 1};
  // frob[k] = x^(p^k) mod f for k = 0..e
  std::vector<Poly> frob{poly_mod(x, g, p)};
  for (std::uint32_t k = 1; k <= e; ++k) frob.push_back(poly_powmod(frob.back(), p, g, p));

  if (poly_sub(frob[e], frob[0], p).size() != 0) return false;
  for (std::uint64_t l : distinct_prime_factors(e)) {
    Poly diff = poly_sub(frob[e / l], frob[0], p);
    Poly gcd = poly_gcd(g, diff, p);
    if (gcd.size() != 1) return false;
  }
  return true;
}

}  // namespace fieldclique::detail
