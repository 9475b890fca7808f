#include "cubicrank/groebner.hpp"

#include <algorithm>
#include <map>

namespace cubicrank {

namespace {

constexpr int kMaxVars = 8;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  int deg = 0;

  friend bool operator==(const Mono& a, const Mono& b) {
    return a.deg == b.deg && a.e == b.e;
  }
};

Mono mono_from_exp(const Exp& x) {
  Mono m;
  for (size_t i = 0; i < x.size(); i++) {
    m.e[i] = (std::uint16_t)x[i];
    m.deg += x[i];
  }
  return m;
}

Exp exp_from_mono(const Mono& m, int nv) {
  Exp e(nv);
  for (int i = 0; i < nv; i++) e[i] = m.e[i];
  return e;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; i++)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; i++) m.e[i] = a.e[i] + b.e[i];
  m.deg = a.deg + b.deg;
  return m;
}

Mono mono_div(const Mono& a, const Mono& b) {  // a / b, assumes b | a
  Mono m;
  for (int i = 0; i < kMaxVars; i++) m.e[i] = a.e[i] - b.e[i];
  m.deg = a.deg - b.deg;
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; i++) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; i++)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

bool mono_less(const Mono& a, const Mono& b, MonomialOrder ord, int nv) {
  if (ord == MonomialOrder::Lex) {
    for (int i = 0; i < nv; i++)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
  if (a.deg != b.deg) return a.deg < b.deg;
  for (int i = nv - 1; i >= 0; i--)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

// descending comparator, so map.begin() is the leading term
struct MonoBefore {
  MonomialOrder ord = MonomialOrder::Grevlex;
  int nv = 0;
  bool operator()(const Mono& a, const Mono& b) const {
    return mono_less(b, a, ord, nv);
  }
};

struct QField {
  using Elt = Rat;
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt inv(const Elt& a) const { return 1 / a; }
  bool is_zero(const Elt& a) const { return a == 0; }
  Elt from_rat(const Rat& r) const { return r; }
  Rat to_rat(const Elt& a) const { return a; }
};

struct PFieldOps {
  PrimeField F;
  using Elt = std::uint64_t;
  Elt add(Elt a, Elt b) const { return F.add(a, b); }
  Elt sub(Elt a, Elt b) const { return F.sub(a, b); }
  Elt mul(Elt a, Elt b) const { return F.mul(a, b); }
  Elt neg(Elt a) const { return F.neg(a); }
  Elt inv(Elt a) const { return F.inv(a); }
  bool is_zero(Elt a) const { return a == 0; }
  Elt from_rat(const Rat& r) const { return F.from_rat(r); }
  Rat to_rat(Elt a) const { return Rat(mpz_class((unsigned long)a)); }
};

template <class F>
class Engine {
 public:
  using Elt = typename F::Elt;
  using PMap = std::map<Mono, Elt, MonoBefore>;

  Engine(const F& field, int nv, MonomialOrder ord, const GBLimits& lim)
      : fld_(field), nv_(nv), ord_(ord), lim_(lim) {}

  PMap empty() const { return PMap(MonoBefore{ord_, nv_}); }

  PMap from_qpoly(const QPoly& q) const {
    PMap m = empty();
    for (auto& [e, c] : q.t) {
      Elt v = fld_.from_rat(c);
      if (!fld_.is_zero(v)) m.emplace(mono_from_exp(e), v);
    }
    return m;
  }

  QPoly to_qpoly(const PMap& m) const {
    QPoly q(nv_);
    for (auto& [mono, c] : m) q.add_term(exp_from_mono(mono, nv_), fld_.to_rat(c));
    return q;
  }

  // f -= c * x^shift * g
  void sub_scaled(PMap& f, const Elt& c, const Mono& shift, const PMap& g) {
    for (auto& [m, a] : g) {
      Mono mm = mono_mul(m, shift);
      Elt delta = fld_.mul(c, a);
      auto it = f.find(mm);
      if (it == f.end()) {
        Elt v = fld_.neg(delta);
        if (!fld_.is_zero(v)) f.emplace(mm, v);
      } else {
        it->second = fld_.sub(it->second, delta);
        if (fld_.is_zero(it->second)) f.erase(it);
      }
    }
  }

  void make_monic(PMap& f) {
    if (f.empty()) return;
    Elt s = fld_.inv(f.begin()->second);
    for (auto& [m, c] : f) c = fld_.mul(c, s);
  }

  // full normal form; sugar accumulates through the reductions used
  PMap reduce(PMap f, const std::vector<PMap>& basis,
              const std::vector<int>& sugars, int& fsugar) {
    PMap out = empty();
    while (!f.empty()) {
      auto lead = *f.begin();
      bool hit = false;
      for (size_t k = 0; k < basis.size(); k++) {
        const Mono& lg = basis[k].begin()->first;
        if (!mono_divides(lg, lead.first)) continue;
        Mono shift = mono_div(lead.first, lg);
        Elt c = fld_.mul(lead.second, fld_.inv(basis[k].begin()->second));
        sub_scaled(f, c, shift, basis[k]);
        fsugar = std::max(fsugar, shift.deg + sugars[k]);
        if (++steps_ > lim_.max_reductions)
          throw ResourceCap("groebner: reduction budget exceeded");
        hit = true;
        break;
      }
      if (!hit) {
        out.insert(lead);
        f.erase(f.begin());
      }
    }
    return out;
  }

  struct SPair {
    int i, j;
    Mono lcm;
    int sugar;
  };

  std::vector<PMap> run(const std::vector<QPoly>& gens) {
    std::vector<PMap> basis;
    std::vector<int> sugars;
    for (auto& g : gens) {
      PMap m = from_qpoly(g);
      if (m.empty()) continue;  // generator vanished mod p
      make_monic(m);
      basis.push_back(std::move(m));
      sugars.push_back(basis.back().begin()->first.deg);
    }
    std::vector<SPair> pending;
    auto push_pairs = [&](int jnew) {
      for (int i = 0; i < jnew; i++) {
        SPair p;
        p.i = i;
        p.j = jnew;
        p.lcm = mono_lcm(basis[i].begin()->first, basis[jnew].begin()->first);
        p.sugar = std::max(
            sugars[i] + mono_div(p.lcm, basis[i].begin()->first).deg,
            sugars[jnew] + mono_div(p.lcm, basis[jnew].begin()->first).deg);
        pending.push_back(p);
      }
    };
    for (int j = 1; j < (int)basis.size(); j++) push_pairs(j);

    while (!pending.empty()) {
      // normal strategy with sugar: smallest sugar, then smallest lcm
      size_t best = 0;
      for (size_t k = 1; k < pending.size(); k++) {
        const SPair &a = pending[k], &b = pending[best];
        bool better;
        if (a.sugar != b.sugar) better = a.sugar < b.sugar;
        else if (!(a.lcm == b.lcm)) better = mono_less(a.lcm, b.lcm, ord_, nv_);
        else better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
        if (better) best = k;
      }
      SPair p = pending[best];
      pending.erase(pending.begin() + best);

      const Mono &li = basis[p.i].begin()->first,
                 &lj = basis[p.j].begin()->first;
      if (mono_coprime(li, lj)) continue;
      if (p.lcm.deg > lim_.max_degree)
        throw ResourceCap("groebner: degree cap exceeded at degree " +
                          std::to_string(p.lcm.deg));

      PMap s = empty();
      sub_scaled(s, fld_.neg(fld_.inv(basis[p.i].begin()->second)),
                 mono_div(p.lcm, li), basis[p.i]);
      sub_scaled(s, fld_.inv(basis[p.j].begin()->second), mono_div(p.lcm, lj),
                 basis[p.j]);
      int sugar = p.sugar;
      PMap h = reduce(std::move(s), basis, sugars, sugar);
      if (h.empty()) continue;
      make_monic(h);
      basis.push_back(std::move(h));
      sugars.push_back(sugar);
      push_pairs((int)basis.size() - 1);
    }

    // minimalize: drop elements whose leading term another's divides
    std::vector<char> keep(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); i++)
      for (size_t j = 0; j < basis.size(); j++) {
        if (i == j || !keep[i] || !keep[j]) continue;
        if (mono_divides(basis[j].begin()->first, basis[i].begin()->first)) {
          keep[i] = 0;
          break;
        }
      }
    std::vector<PMap> mins;
    std::vector<int> msugars;
    for (size_t i = 0; i < basis.size(); i++)
      if (keep[i]) {
        mins.push_back(std::move(basis[i]));
        msugars.push_back(sugars[i]);
      }

    // tail-reduce each element against the others (leading terms are stable)
    for (size_t i = 0; i < mins.size(); i++) {
      PMap tail = mins[i];
      auto lead = *tail.begin();
      tail.erase(tail.begin());
      std::vector<PMap> others;
      std::vector<int> osugars;
      for (size_t j = 0; j < mins.size(); j++)
        if (j != i) {
          others.push_back(mins[j]);
          osugars.push_back(msugars[j]);
        }
      int sg = msugars[i];
      PMap r = reduce(std::move(tail), others, osugars, sg);
      r.insert(lead);
      mins[i] = std::move(r);
    }
    std::sort(mins.begin(), mins.end(), [&](const PMap& a, const PMap& b) {
      return mono_less(a.begin()->first, b.begin()->first, ord_, nv_);
    });
    return mins;
  }

  long steps() const { return steps_; }

 private:
  F fld_;
  int nv_;
  MonomialOrder ord_;
  GBLimits lim_;
  long steps_ = 0;
};

template <class F>
GroebnerBasis run_buchberger(const F& fld, const Ideal& I,
                             const GBLimits& limits) {
  Engine<F> eng(fld, I.nv, I.order, limits);
  auto basis = eng.run(I.gens);
  GroebnerBasis G;
  G.nv = I.nv;
  G.order = I.order;
  G.prime = I.prime;
  for (auto& b : basis) G.polys.push_back(eng.to_qpoly(b));
  return G;
}

template <class F>
QPoly run_normal_form(const F& fld, const QPoly& f, const GroebnerBasis& G) {
  Engine<F> eng(fld, G.nv, G.order, GBLimits{1000000000L, 1 << 14});
  std::vector<typename Engine<F>::PMap> basis;
  std::vector<int> sugars;
  for (auto& p : G.polys) {
    basis.push_back(eng.from_qpoly(p));
    sugars.push_back(std::max(0, p.degree()));
  }
  int sg = std::max(0, f.degree());
  return eng.to_qpoly(eng.reduce(eng.from_qpoly(f), basis, sugars, sg));
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const GBLimits& limits) {
  if (I.nv < 1 || I.nv > kMaxVars)
    throw std::invalid_argument("buchberger: 1..8 variables supported");
  for (auto& g : I.gens) {
    if (g.nv != I.nv)
      throw std::invalid_argument("buchberger: generator arity mismatch");
    if (g.is_zero())
      throw std::invalid_argument("buchberger: zero generator");
  }
  if (I.prime == 0) return run_buchberger(QField{}, I, limits);
  return run_buchberger(PFieldOps{PrimeField{I.prime}}, I, limits);
}

QPoly normal_form(const QPoly& f, const GroebnerBasis& G) {
  if (f.nv != G.nv) throw std::invalid_argument("normal_form: arity mismatch");
  if (G.prime == 0) return run_normal_form(QField{}, f, G);
  return run_normal_form(PFieldOps{PrimeField{G.prime}}, f, G);
}

namespace {

// Hilbert numerator N(t) of S/I for a monomial ideal, as coefficients of a
// polynomial in t with N = H * (1-t)^n
std::vector<long long> poly_mul_t(const std::vector<long long>& a, int shift) {
  std::vector<long long> r(a.size() + shift, 0);
  for (size_t i = 0; i < a.size(); i++) r[i + shift] = a[i];
  return r;
}

void poly_sub(std::vector<long long>& a, const std::vector<long long>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); i++) a[i] -= b[i];
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::vector<Mono> out;
  for (size_t i = 0; i < gens.size(); i++) {
    bool dominated = false;
    for (size_t j = 0; j < gens.size() && !dominated; j++)
      if (i != j && mono_divides(gens[j], gens[i]) &&
          !(gens[i] == gens[j] && j > i))
        dominated = true;
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

std::vector<long long> hilbert_numerator(std::vector<Mono> gens) {
  gens = minimalize(gens);
  if (gens.empty()) return {1};
  if (gens[0].deg == 0) return {0};  // unit ideal
  bool pairwise_coprime = true;
  for (size_t i = 0; i < gens.size() && pairwise_coprime; i++)
    for (size_t j = i + 1; j < gens.size() && pairwise_coprime; j++)
      if (!mono_coprime(gens[i], gens[j])) pairwise_coprime = false;
  if (pairwise_coprime) {
    // N = prod (1 - t^deg_i)
    std::vector<long long> acc{1};
    for (auto& g : gens) {
      std::vector<long long> next = acc;
      poly_sub(next, poly_mul_t(acc, g.deg));
      acc = next;
    }
    return acc;
  }
  // pivot on the last generator m: N(I) = N(I \ m) - t^deg(m) N((I \ m) : m)
  Mono m = gens.back();
  gens.pop_back();
  std::vector<Mono> colon;
  for (auto& g : gens) {
    Mono q;
    for (int i = 0; i < kMaxVars; i++) {
      q.e[i] = g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0;
      q.deg += q.e[i];
    }
    colon.push_back(q);
  }
  std::vector<long long> a = hilbert_numerator(gens);
  std::vector<long long> b = hilbert_numerator(colon);
  poly_sub(a, poly_mul_t(b, m.deg));
  return a;
}

}  // namespace

std::pair<int, int> dim_degree(const GroebnerBasis& G) {
  for (auto& p : G.polys)
    if (!p.homogeneous())
      throw std::invalid_argument("dim_degree: non-homogeneous basis");
  // map iteration is lex ascending, not the GB order, so scan for the true
  // leading monomial of each basis element
  std::vector<Mono> lts;
  for (auto& p : G.polys) {
    Mono best = mono_from_exp(p.t.begin()->first);
    for (auto& [e, c] : p.t) {
      Mono m = mono_from_exp(e);
      if (mono_less(best, m, G.order, G.nv)) best = m;
    }
    lts.push_back(best);
  }
  std::vector<long long> N = hilbert_numerator(lts);
  // strip trailing zeros
  while (!N.empty() && N.back() == 0) N.pop_back();
  if (N.empty()) return {-1, 0};  // unit ideal: empty scheme
  auto eval1 = [](const std::vector<long long>& p) {
    long long s = 0;
    for (auto c : p) s += c;
    return s;
  };
  int stripped = 0;
  while (eval1(N) == 0) {
    // divide by (1 - t): partial sums
    std::vector<long long> q(N.size() - 1, 0);
    long long run = 0;
    for (size_t i = 0; i + 1 < N.size(); i++) {
      run += N[i];
      q[i] = run;
    }
    N = q;
    while (!N.empty() && N.back() == 0) N.pop_back();
    stripped++;
    if (N.empty()) return {-1, 0};
  }
  int krull = G.nv - stripped;
  long long deg = eval1(N);
  return {krull - 1, (int)(deg < 0 ? -deg : deg)};
}

std::vector<Exp> quotient_basis(const GroebnerBasis& G) {
  std::vector<Mono> lts;
  for (auto& p : G.polys) {
    Mono best = mono_from_exp(p.t.begin()->first);
    for (auto& [e, c] : p.t) {
      Mono m = mono_from_exp(e);
      if (mono_less(best, m, G.order, G.nv)) best = m;
    }
    lts.push_back(best);
  }
  // finite iff every variable appears as a pure power among leading terms
  for (int v = 0; v < G.nv; v++) {
    bool found = false;
    for (auto& m : lts) {
      bool pure = m.e[v] > 0;
      for (int i = 0; i < G.nv && pure; i++)
        if (i != v && m.e[i] > 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found)
      throw std::invalid_argument("quotient_basis: positive-dimensional ideal");
  }
  auto reducible = [&](const Mono& m) {
    for (auto& l : lts)
      if (mono_divides(l, m)) return true;
    return false;
  };
  std::vector<Exp> out;
  std::vector<Mono> frontier{Mono{}};
  std::map<Exp, char> seen;
  seen[Exp(G.nv, 0)] = 1;
  while (!frontier.empty()) {
    Mono m = frontier.back();
    frontier.pop_back();
    if (reducible(m)) continue;
    out.push_back(exp_from_mono(m, G.nv));
    for (int v = 0; v < G.nv; v++) {
      Mono up = m;
      up.e[v]++;
      up.deg++;
      Exp key = exp_from_mono(up, G.nv);
      if (!seen.count(key)) {
        seen[key] = 1;
        frontier.push_back(up);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Exp& a, const Exp& b) {
    return mono_less(mono_from_exp(a), mono_from_exp(b), G.order, G.nv);
  });
  return out;
}

QMat multiplication_matrix(const GroebnerBasis& G, const QPoly& ell,
                           const std::vector<Exp>& basis) {
  if (G.prime != 0)
    throw std::invalid_argument("multiplication_matrix: rational basis only");
  std::map<Exp, int> index;
  for (size_t i = 0; i < basis.size(); i++) index[basis[i]] = (int)i;
  int m = (int)basis.size();
  QMat M = qmat(m, m);
  for (int j = 0; j < m; j++) {
    QPoly xb(G.nv);
    xb.add_term(basis[j], Rat(1));
    QPoly nf = normal_form(ell * xb, G);
    for (auto& [e, c] : nf.t) {
      auto it = index.find(e);
      if (it == index.end())
        throw std::logic_error("multiplication_matrix: non-standard monomial");
      M[it->second][j] = c;
    }
  }
  return M;
}

}  // namespace cubicrank
