#include "cubicrank/interp.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "cubicrank/rng.hpp"

namespace cubicrank {

std::vector<int> rref_modp(PMatU& rows, std::uint64_t p, bool parallel) {
  PrimeField F{p};
  const int m = (int)rows.size();
  const int n = m ? (int)rows[0].size() : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    std::uint64_t inv = F.inv(rows[r][c]);
    for (int j = c; j < n; ++j) rows[r][j] = F.mul(rows[r][j], inv);
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t fac = rows[i][c];
      for (int j = c; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(fac, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

PMatU nullspace_modp(const PMatU& rows, std::uint64_t p, bool parallel) {
  if (rows.empty()) return {};
  PMatU red = rows;
  std::vector<int> pivots = rref_modp(red, p, parallel);
  const int n = (int)rows[0].size();
  PrimeField F{p};
  std::vector<int> pivot_of_col(n, -1);
  for (int k = 0; k < (int)pivots.size(); ++k) pivot_of_col[pivots[k]] = k;
  PMatU basis;
  for (int c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    PRow v(n, 0);
    v[c] = 1;
    for (int k = 0; k < (int)pivots.size(); ++k)
      v[pivots[k]] = F.neg(red[k][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

mpz_class crt_pair(std::uint64_t r1, std::uint64_t p1, std::uint64_t r2,
                   std::uint64_t p2) {
  mpz_class m1 = from_u64(p1), m2 = from_u64(p2);
  mpz_class a1 = from_u64(r1), a2 = from_u64(r2);
  mpz_class inv;  // m1^{-1} mod m2
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw std::invalid_argument("crt_pair: moduli not coprime");
  mpz_class t = ((a2 - a1) * inv) % m2;
  if (t < 0) t += m2;
  return a1 + m1 * t;
}

std::optional<Rat> rational_reconstruct(const mpz_class& a,
                                        const mpz_class& m) {
  // half-extended Euclid on (m, a); accept when remainder and cofactor both
  // drop below sqrt(m/2)
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  mpz_class den = t1, num = r1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat q{num, den};
  q.canonicalize();
  return q;
}

namespace {

// kernel vector mod p of the sample-evaluation matrix, normalized so the
// first nonzero coordinate equals 1; throws if the kernel is not a line
PRow kernel_line_modp(const std::vector<Exp>& monomials,
                      const std::vector<std::vector<Rat>>& samples,
                      std::uint64_t p, bool parallel) {
  PrimeField F{p};
  const int nm = (int)monomials.size();
  PMatU mat(samples.size(), PRow(nm, 0));
  for (size_t s = 0; s < samples.size(); ++s) {
    std::vector<std::uint64_t> coords(samples[s].size());
    for (size_t i = 0; i < coords.size(); ++i)
      coords[i] = F.from_rat(samples[s][i]);
    for (int j = 0; j < nm; ++j) {
      std::uint64_t v = 1;
      const Exp& e = monomials[j];
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) v = F.mul(v, F.pow(coords[i], e[i]));
      mat[s][j] = v;
    }
  }
  PMatU ker = nullspace_modp(mat, p, parallel);
  if (ker.size() != 1)
    throw std::runtime_error("interpolate_vanishing: kernel dimension " +
                             std::to_string(ker.size()) + " mod prime " +
                             std::to_string(p) + " (expected 1)");
  PRow v = ker[0];
  std::uint64_t lead = 0;
  for (int j = 0; j < nm; ++j)
    if (v[j] != 0) {
      lead = v[j];
      break;
    }
  std::uint64_t inv = F.inv(lead);
  for (auto& x : v) x = F.mul(x, inv);
  return v;
}

}  // namespace

std::vector<mpz_class> interpolate_vanishing(
    const std::vector<Exp>& monomials,
    const std::vector<std::vector<Rat>>& samples, std::uint64_t seed,
    bool parallel) {
  if (monomials.empty()) throw std::invalid_argument("empty monomial list");
  if (samples.size() < monomials.size())
    throw std::invalid_argument("need at least as many samples as monomials");
  Rng rng(seed, "interp-primes");
  std::vector<std::uint64_t> primes;
  std::vector<PRow> lines;
  int attempts = 0;
  while (lines.size() < 2) {
    if (++attempts > 32)
      throw std::runtime_error("interpolate_vanishing: cannot find primes");
    std::uint64_t p = random_prime(62, rng);
    if (!primes.empty() && p == primes[0]) continue;
    try {
      lines.push_back(kernel_line_modp(monomials, samples, p, parallel));
      primes.push_back(p);
    } catch (const std::domain_error&) {
      // a sample denominator hit this prime; redraw
    }
  }
  const int nm = (int)monomials.size();
  mpz_class modulus = from_u64(primes[0]) * from_u64(primes[1]);
  std::vector<Rat> rat(nm);
  mpz_class den_lcm = 1;
  for (int j = 0; j < nm; ++j) {
    mpz_class lift = crt_pair(lines[0][j], primes[0], lines[1][j], primes[1]);
    auto q = rational_reconstruct(lift, modulus);
    if (!q)
      throw std::runtime_error(
          "interpolate_vanishing: rational reconstruction failed");
    rat[j] = *q;
    mpz_class d = rat[j].get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out(nm);
  mpz_class content = 0;
  for (int j = 0; j < nm; ++j) {
    Rat scaled = rat[j] * Rat(den_lcm);
    out[j] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[j].get_mpz_t());
  }
  if (content > 1)
    for (auto& z : out) z /= content;
  for (int j = 0; j < nm; ++j) {
    if (out[j] == 0) continue;
    if (out[j] < 0)
      for (auto& z : out) z = -z;
    break;
  }
  return out;
}

}  // namespace cubicrank
