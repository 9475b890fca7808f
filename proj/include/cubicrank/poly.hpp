#pragma once
#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cubicrank/field.hpp"

namespace cubicrank {

using Exp = std::vector<int>;

inline int exp_total(const Exp& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Sparse multivariate polynomial over a coefficient field K.  The exponent
// map is kept free of zero coefficients; iteration order (lex ascending on
// exponent vectors) is the canonical term order used for printing, hashing
// and "first differing monomial" diagnostics.
template <class K>
struct SparsePoly {
  int nv = 0;
  std::map<Exp, K> t;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nv(nvars) {}

  static SparsePoly constant(int nvars, const K& c) {
    SparsePoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
  }
  static SparsePoly variable(int nvars, int i, const K& c = K(1)) {
    SparsePoly p(nvars);
    Exp e(nvars, 0);
    e[i] = 1;
    p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return t.empty(); }
  size_t terms() const { return t.size(); }

  void add_term(const Exp& e, const K& c) {
    if ((int)e.size() != nv) throw std::invalid_argument("exponent arity");
    auto it = t.find(e);
    if (it == t.end()) {
      K v = c;
      if (!(v == K(0))) t.emplace(e, v);
    } else {
      it->second += c;
      if (it->second == K(0)) t.erase(it);
    }
  }

  const K coeff(const Exp& e) const {
    auto it = t.find(e);
    return it == t.end() ? K(0) : it->second;
  }

  int degree() const {
    int d = -1;
    for (auto& [e, c] : t) d = std::max(d, exp_total(e));
    return d;
  }

  bool homogeneous() const {
    int d = -1;
    for (auto& [e, c] : t) {
      int s = exp_total(e);
      if (d < 0) d = s;
      else if (s != d) return false;
    }
    return true;
  }

  std::vector<int> support_vars() const {
    std::vector<int> used;
    std::vector<char> seen(nv, 0);
    for (auto& [e, c] : t)
      for (int i = 0; i < nv; i++)
        if (e[i] > 0 && !seen[i]) { seen[i] = 1; used.push_back(i); }
    std::sort(used.begin(), used.end());
    return used;
  }

  friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) {
    check(x, y);
    SparsePoly r = x;
    for (auto& [e, c] : y.t) r.add_term(e, c);
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& x, const SparsePoly& y) {
    check(x, y);
    SparsePoly r = x;
    for (auto& [e, c] : y.t) r.add_term(e, K(0) - c);
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& x) {
    SparsePoly r(x.nv);
    for (auto& [e, c] : x.t) r.t.emplace(e, K(0) - c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
    check(x, y);
    SparsePoly r(x.nv);
    for (auto& [e1, c1] : x.t)
      for (auto& [e2, c2] : y.t) {
        Exp e(x.nv);
        for (int i = 0; i < x.nv; i++) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  friend SparsePoly operator*(const K& c, const SparsePoly& x) {
    SparsePoly r(x.nv);
    if (c == K(0)) return r;
    for (auto& [e, v] : x.t) r.t.emplace(e, c * v);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& y) { return *this = *this + y; }
  SparsePoly& operator-=(const SparsePoly& y) { return *this = *this - y; }
  SparsePoly& operator*=(const SparsePoly& y) { return *this = *this * y; }

  friend bool operator==(const SparsePoly& x, const SparsePoly& y) {
    return x.nv == y.nv && x.t == y.t;
  }

  SparsePoly pow(int k) const {
    SparsePoly r = constant(nv, K(1));
    for (int i = 0; i < k; i++) r = r * (*this);
    return r;
  }

  K eval(const std::vector<K>& x) const {
    if ((int)x.size() != nv) throw std::invalid_argument("eval arity");
    K s(0);
    for (auto& [e, c] : t) {
      K m = c;
      for (int i = 0; i < nv; i++)
        for (int k = 0; k < e[i]; k++) m *= x[i];
      s += m;
    }
    return s;
  }

  SparsePoly derivative(int i) const {
    SparsePoly r(nv);
    for (auto& [e, c] : t) {
      if (e[i] == 0) continue;
      Exp d = e;
      d[i] -= 1;
      r.add_term(d, K(e[i]) * c);
    }
    return r;
  }

  // substitute variable i -> value (reducing arity is left to the caller)
  SparsePoly subst_const(int i, const K& v) const {
    SparsePoly r(nv);
    for (auto& [e, c] : t) {
      K m = c;
      for (int k = 0; k < e[i]; k++) m *= v;
      Exp d = e;
      d[i] = 0;
      r.add_term(d, m);
    }
    return r;
  }

  // full linear substitution x_i -> sum_j M[i][j] y_j (arity preserved)
  SparsePoly subst_linear(const std::vector<std::vector<K>>& M) const {
    std::vector<SparsePoly> forms;
    for (int i = 0; i < nv; i++) {
      SparsePoly li(nv);
      for (int j = 0; j < nv; j++) li.add_term(unit(nv, j), M[i][j]);
      forms.push_back(li);
    }
    SparsePoly r(nv);
    for (auto& [e, c] : t) {
      SparsePoly m = constant(nv, c);
      for (int i = 0; i < nv; i++)
        for (int k = 0; k < e[i]; k++) m = m * forms[i];
      r += m;
    }
    return r;
  }

  // drop trailing variables (they must not occur)
  SparsePoly restrict_vars(int new_nv) const {
    SparsePoly r(new_nv);
    for (auto& [e, c] : t) {
      for (int i = new_nv; i < nv; i++)
        if (e[i] != 0) throw std::invalid_argument("variable out of range");
      r.t.emplace(Exp(e.begin(), e.begin() + new_nv), c);
    }
    return r;
  }
  SparsePoly extend_vars(int new_nv) const {
    SparsePoly r(new_nv);
    for (auto& [e, c] : t) {
      Exp d = e;
      d.resize(new_nv, 0);
      r.t.emplace(d, c);
    }
    return r;
  }

  std::string str(const std::string& base = "x") const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(it->second) << ")";
      for (int i = 0; i < nv; i++)
        if (it->first[i] > 0) {
          os << "*" << base << i + 1;
          if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
  }

 private:
  static Exp unit(int nvars, int j) {
    Exp e(nvars, 0);
    e[j] = 1;
    return e;
  }
  static void check(const SparsePoly& x, const SparsePoly& y) {
    if (x.nv != y.nv) throw std::invalid_argument("variable count mismatch");
  }
  static std::string coeff_str(const Rat& c) { return c.get_str(); }
  static std::string coeff_str(const FieldElement& c) { return c.str(); }
  template <class T>
  static std::string coeff_str(const T& c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }
};

using QPoly = SparsePoly<Rat>;
using FPoly = SparsePoly<FieldElement>;

inline FPoly to_fpoly(const QPoly& p) {
  FPoly r(p.nv);
  for (auto& [e, c] : p.t) r.t.emplace(e, FieldElement(c));
  return r;
}

inline QPoly to_qpoly(const FPoly& p) {
  QPoly r(p.nv);
  for (auto& [e, c] : p.t) r.t.emplace(e, c.as_rat());
  return r;
}

// exact multivariate division: returns q with p = q*d, throws if d does not
// divide p (needed by the fraction-free determinant above 5x5)
template <class K>
SparsePoly<K> divide_exact(const SparsePoly<K>& p, const SparsePoly<K>& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  SparsePoly<K> r = p, q(p.nv);
  while (!r.is_zero()) {
    // leading term under the map's lex order
    auto lr = std::prev(r.t.end());
    auto ld = std::prev(d.t.end());
    Exp e(p.nv);
    for (int i = 0; i < p.nv; i++) {
      e[i] = lr->first[i] - ld->first[i];
      if (e[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    K c = lr->second / ld->second;
    SparsePoly<K> m(p.nv);
    m.add_term(e, c);
    q += m;
    r -= m * d;
  }
  return q;
}

}  // namespace cubicrank
