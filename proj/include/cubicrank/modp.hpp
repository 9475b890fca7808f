#pragma once

#include <cstdint>
#include <stdexcept>

#include "cubicrank/field.hpp"

namespace cubicrank {

inline mpz_class from_u64(std::uint64_t v) {
  return mpz_class((unsigned long)v);  // LP64: unsigned long holds 64 bits
}

// arithmetic in GF(p) for p < 2^63, products via 128-bit intermediates
struct PrimeField {
  std::uint64_t p = 0;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (std::uint64_t)((unsigned __int128)a * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero mod p");
    return pow(a, p - 2);
  }
  // reduce a rational; throws when the denominator vanishes mod p
  std::uint64_t from_rat(const Rat& r) const {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pz((unsigned long)p);  // p < 2^63 fits unsigned long on LP64
    mpz_class nm = num % pz, dm = den % pz;
    if (nm < 0) nm += pz;
    std::uint64_t d = mpz_get_ui(dm.get_mpz_t());
    if (d == 0) throw std::domain_error("denominator divisible by p");
    return mul(mpz_get_ui(nm.get_mpz_t()), inv(d));
  }
};

// deterministic Miller-Rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; s++; }
  PrimeField F{n};
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = F.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; r++) {
      x = F.mul(x, x);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t random_prime(int bits, Rng& rng) {
  if (bits < 3 || bits > 62)
    throw std::invalid_argument("random_prime: bits out of range [3, 62]");
  for (;;) {
    std::uint64_t lo = 1ull << (bits - 1);
    std::uint64_t n = lo + rng.below(lo);
    n |= 1;
    if (is_prime_u64(n)) return n;
  }
}

}  // namespace cubicrank
