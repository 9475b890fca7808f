#include "cubicrank/unipoly.hpp"

#include <stdexcept>

namespace cubicrank {

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return (int)p.size() - 1; }

UPoly uderiv(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); i++) d.push_back(Rat((long)i) * p[i]);
  utrim(d);
  return d;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++) c[i + j] += a[i] * b[j];
  }
  utrim(c);
  return c;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); i++) c[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) c[i] += b[i];
  utrim(c);
  return c;
}

UPoly uneg(const UPoly& a) {
  UPoly c = a;
  for (auto& x : c) x = -x;
  return c;
}

UPoly urem(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("urem: division by zero");
  utrim(a);
  while (udeg(a) >= udeg(b)) {
    Rat f = a.back() / b.back();
    int shift = udeg(a) - udeg(b);
    for (size_t i = 0; i < b.size(); i++) a[i + shift] -= f * b[i];
    utrim(a);
  }
  return a;
}

UPoly uquo(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("uquo: division by zero");
  utrim(a);
  if (udeg(a) < udeg(b)) return {};
  UPoly q(udeg(a) - udeg(b) + 1, Rat(0));
  while (udeg(a) >= udeg(b)) {
    Rat f = a.back() / b.back();
    int shift = udeg(a) - udeg(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); i++) a[i + shift] -= f * b[i];
    utrim(a);
  }
  utrim(q);
  return q;
}

UPoly umonic(UPoly a) {
  utrim(a);
  if (a.empty()) return a;
  Rat inv = 1 / a.back();
  for (auto& x : a) x *= inv;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = b;
    b = r;
  }
  return umonic(a);
}

Rat ueval(const UPoly& p, const Rat& x) {
  Rat v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<UPoly> squarefree_decomposition(UPoly p) {
  p = umonic(p);
  std::vector<UPoly> out;
  if (udeg(p) < 1) return out;
  UPoly dp = uderiv(p);
  UPoly a = ugcd(p, dp);
  UPoly b = uquo(p, a);
  UPoly c = uquo(dp, a);
  UPoly d = uadd(c, uneg(uderiv(b)));
  while (udeg(b) >= 1) {
    UPoly f = ugcd(b, d);
    out.push_back(f);
    b = uquo(b, f);
    c = uquo(d, f);
    d = uadd(c, uneg(uderiv(b)));
  }
  return out;
}

UPoly to_upoly(const QPoly& p) {
  if (p.nv != 1) throw std::invalid_argument("to_upoly: univariate expected");
  UPoly u(p.degree() + 1, Rat(0));
  for (auto& [e, c] : p.t) u[e[0]] = c;
  utrim(u);
  return u;
}

QPoly from_upoly(const UPoly& p) {
  QPoly q(1);
  for (size_t i = 0; i < p.size(); i++)
    if (p[i] != 0) q.add_term(Exp{(int)i}, p[i]);
  return q;
}

}  // namespace cubicrank
