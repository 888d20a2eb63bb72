#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hgr/error.hpp"

namespace hgr {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by prime.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const {
    std::uint64_t v = 1;
    for (const auto& f : factors) {
      for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
    }
    return v;
  }

  unsigned exponent_of(std::uint64_t p) const {
    for (const auto& f : factors) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division; fine for n up to ~1e12.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize(0)");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    f.factors.push_back(pp);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

/// Product of the distinct primes dividing n.
inline std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& f : factorize(n).factors) r *= f.prime;
  return r;
}

/// gcd(m, phi(m)) == 1: exactly the orders m for which every group of order m is cyclic.
inline bool is_burnside_number(std::uint64_t m) {
  if (m == 0) throw PreconditionError("is_burnside_number(0)");
  return std::gcd(m, euler_phi(m)) == 1;
}

inline bool is_squarefree(std::uint64_t n) {
  for (const auto& f : factorize(n).factors) {
    if (f.exponent > 1) return false;
  }
  return true;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

/// base^exp mod m (m >= 1).
inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % m);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % m);
    exp >>= 1;
  }
  return result;
}

}  // namespace hgr
