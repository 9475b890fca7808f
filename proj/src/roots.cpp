#include "cubicrank/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubicrank/rng.hpp"

namespace cubicrank {

static Cx horner(const std::vector<Cx>& c, Cx z) {
  Cx v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<Cx> aberth_roots(const std::vector<Cx>& coeffs, std::uint64_t seed,
                             double tol, int max_iter) {
  int n = (int)coeffs.size() - 1;
  if (n <= 0) return {};
  std::vector<Cx> dc(n);
  for (int i = 1; i <= n; i++) dc[i - 1] = (double)i * coeffs[i];

  // Cauchy bound on root magnitudes, used as the initial circle radius.
  double lead = std::abs(coeffs[n]);
  double radius = 0;
  for (int i = 0; i < n; i++) radius = std::max(radius, std::abs(coeffs[i]) / lead);
  radius = 1.0 + radius;

  Rng rng(seed, "aberth");
  double phase = 2 * M_PI * rng.real01();
  std::vector<Cx> z(n);
  for (int k = 0; k < n; k++) {
    double a = phase + 2 * M_PI * k / n + 0.35;  // avoid real-axis symmetry
    z[k] = std::polar(0.7 * radius + 0.3 * radius * (k % 3) / 3.0, a);
  }

  // a root is accepted once |p(z)| drops below the double-precision backward
  // error of evaluating p at z; the step criterion alone can stall just above
  // a tight tolerance when the arithmetic has already saturated
  auto backward_ok = [&](Cx zk, Cx pval) {
    double az = std::abs(zk), s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      s = s * az + std::abs(*it);
    return std::abs(pval) <= 16.0 * std::numeric_limits<double>::epsilon() * s;
  };
  for (int iter = 0; iter < max_iter; iter++) {
    double worst = 0;
    bool saturated = true;
    for (int k = 0; k < n; k++) {
      Cx p = horner(coeffs, z[k]);
      if (backward_ok(z[k], p)) continue;
      saturated = false;
      Cx dp = horner(dc, z[k]);
      Cx ratio = (dp == Cx(0)) ? Cx(0) : p / dp;
      Cx sum = 0;
      for (int j = 0; j < n; j++)
        if (j != k) sum += Cx(1) / (z[k] - z[j]);
      Cx denom = Cx(1) - ratio * sum;
      Cx step = (denom == Cx(0)) ? ratio : ratio / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (saturated || worst < tol) return z;
  }
  throw ConvergenceFailure("aberth_roots: no convergence after " +
                           std::to_string(max_iter) + " iterations");
}

std::vector<std::pair<Cx, int>> complex_roots(const UPoly& p, std::uint64_t seed,
                                              double tol, int max_iter) {
  UPoly q = p;
  utrim(q);
  if (q.empty()) throw std::domain_error("complex_roots: zero polynomial");
  std::vector<std::pair<Cx, int>> out;
  if (udeg(q) == 0) return out;

  auto factors = squarefree_decomposition(q);
  for (size_t m = 0; m < factors.size(); m++) {
    const UPoly& f = factors[m];
    if (udeg(f) < 1) continue;
    std::vector<Cx> c(f.size());
    for (size_t i = 0; i < f.size(); i++) c[i] = Cx(f[i].get_d(), 0.0);
    auto roots = aberth_roots(c, seed + 1000 * m, tol, max_iter);
    for (auto& r : roots) out.push_back({r, (int)m + 1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

}  // namespace cubicrank
