#include "cubicrank/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cubicrank/interp.hpp"
#include "cubicrank/io.hpp"

#ifndef CUBICRANK_SOURCE_DIR
#define CUBICRANK_SOURCE_DIR "."
#endif

namespace cubicrank {

std::string data_dir() {
  if (const char* env = std::getenv("CUBICRANK_DATA_DIR"); env && *env)
    return env;
  return std::string(CUBICRANK_SOURCE_DIR) + "/data";
}

Rat hyperdet_222(const CubicForm& f) {
  if (f.n != 2) throw std::invalid_argument("hyperdet_222 needs a binary cubic");
  // det(uA + vB) = det(A) u^2 + b uv + det(B) v^2 with the slices A, B
  auto entry = [&](int i, int j, int k) {
    return f.tensor_entry(i, j, k).as_rat();
  };
  auto det2 = [](const Rat& a, const Rat& b, const Rat& c,
                 const Rat& d) -> Rat { return a * d - b * c; };
  Rat detA = det2(entry(0, 0, 0), entry(0, 0, 1), entry(0, 1, 0), entry(0, 1, 1));
  Rat detB = det2(entry(1, 0, 0), entry(1, 0, 1), entry(1, 1, 0), entry(1, 1, 1));
  Rat detAB = det2(entry(0, 0, 0) + entry(1, 0, 0), entry(0, 0, 1) + entry(1, 0, 1),
                   entry(0, 1, 0) + entry(1, 1, 0), entry(0, 1, 1) + entry(1, 1, 1));
  Rat b = detAB - detA - detB;
  return b * b - 4 * detA * detB;
}

ExactMatrix hessian(const CubicForm& f) {
  ExactMatrix H = ExactMatrix::poly(f.n, f.n, f.n);
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      H.pat(i, j) = f.poly.derivative(i).derivative(j);
  return H;
}

QPoly hessian_det(const CubicForm& f) { return to_qpoly(det_poly(hessian(f))); }

namespace {

std::vector<QPoly> jacobian(const QPoly& g) {
  std::vector<QPoly> out;
  for (int i = 0; i < g.nv; ++i) {
    QPoly d = g.derivative(i);
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

}  // namespace

SingularReport is_singular(const CubicForm& f, const GBLimits& limits) {
  if (f.poly.is_zero()) throw std::invalid_argument("is_singular: zero form");
  SingularReport rep;
  Ideal I{f.n, MonomialOrder::Grevlex, 0, jacobian(to_qpoly(f.poly))};
  GroebnerBasis G = buchberger(I, limits);
  auto [dim, deg] = dim_degree(G);
  rep.dim = dim;
  rep.degree = dim >= 0 ? deg : 0;
  rep.singular = dim >= 0;
  if (dim == 0 && f.n >= 2) rep.points = quotient_solve(G, {}, limits).points;
  return rep;
}

// ---------------------------------------------------------------- genericity

namespace {

using PVec = std::vector<std::uint64_t>;

int pdeg(const PVec& a) {
  int d = (int)a.size() - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

PVec pderiv_modp(const PVec& a, const PrimeField& F) {
  PVec d;
  for (size_t i = 1; i < a.size(); ++i)
    d.push_back(F.mul(a[i], i % F.p));
  return d;
}

PVec prem_modp(PVec a, const PVec& b, const PrimeField& F) {
  int db = pdeg(b);
  std::uint64_t lead_inv = F.inv(b[db]);
  for (int da = pdeg(a); da >= db; da = pdeg(a)) {
    std::uint64_t c = F.mul(a[da], lead_inv);
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
  }
  return a;
}

int pgcd_degree_modp(PVec a, PVec b, const PrimeField& F) {
  while (pdeg(b) >= 0) {
    PVec r = prem_modp(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return pdeg(a);
}

// characteristic polynomial mod p by the Faddeev-LeVerrier recurrence;
// requires p > matrix size
PVec charpoly_modp(const std::vector<PVec>& A, const PrimeField& F) {
  const int n = (int)A.size();
  PVec c(n + 1, 0);
  c[n] = 1;
  std::vector<PVec> M(n, PVec(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{n-k+1} I) ... with M_0 adjusted so M_1 = A
    std::vector<PVec> B = M;
    if (k > 1)
      for (int i = 0; i < n; ++i) B[i][i] = F.add(B[i][i], c[n - k + 1]);
    std::vector<PVec> N(n, PVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j)
          N[i][j] = F.add(N[i][j], F.mul(A[i][l], B[l][j]));
      }
    M = std::move(N);
    std::uint64_t tr = 0;
    for (int i = 0; i < n; ++i) tr = F.add(tr, M[i][i]);
    c[n - k] = F.neg(F.mul(tr, F.inv(k % F.p)));
  }
  return c;
}

QPoly monomial_poly(int nv, const Exp& e) {
  QPoly m(nv);
  m.add_term(e, Rat(1));
  return m;
}

// distinctness of a projective-dimension-0 scheme mod p: work on an affine
// chart capturing all D points, then test squarefreeness of the
// characteristic polynomial of a random linear form on the quotient
std::optional<bool> distinct_modp(const std::vector<QPoly>& gens, int nv,
                                  std::uint64_t p, int D, std::uint64_t seed,
                                  const GBLimits& limits) {
  PrimeField F{p};
  const int ncharts = nv + 6;
  for (int chart = 0; chart < ncharts; ++chart) {
    QMat M;
    if (chart < nv) {
      M = qmat_identity(nv);
      std::swap(M[chart], M[nv - 1]);
    } else {
      Rng crng(seed, "gen-chart-" + std::to_string(p) + "-" +
                         std::to_string(chart));
      M = qmat(nv, nv);
      do {
        for (int i = 0; i < nv; ++i)
          for (int j = 0; j < nv; ++j)
            M[i][j] = Rat((long)crng.int_in(-3, 3));
      } while (qmat_det(M) == 0);
    }
    std::vector<QPoly> aff;
    bool bad = false;
    for (const QPoly& g : gens) {
      QPoly h = g.subst_linear(M).subst_const(nv - 1, Rat(1));
      h = h.restrict_vars(nv - 1);
      if (!h.is_zero()) aff.push_back(h);
    }
    if (aff.empty()) return std::nullopt;
    GroebnerBasis G;
    std::vector<Exp> basis;
    try {
      G = buchberger(Ideal{nv - 1, MonomialOrder::Grevlex, p, aff}, limits);
      basis = quotient_basis(G);
    } catch (const std::invalid_argument&) {
      continue;  // chart missed the cone structure; try another
    } catch (const std::domain_error&) {
      return std::nullopt;  // coefficient denominator hit p; redraw the prime
    }
    if ((int)basis.size() != D) continue;  // points escaped to infinity
    int nontrivial = 0;
    for (int li = 0; li < 4; ++li) {
      Rng lrng(seed, "gen-ell-" + std::to_string(p) + "-" +
                         std::to_string(chart) + "-" + std::to_string(li));
      QPoly ell(nv - 1);
      for (int v = 0; v < nv - 1; ++v) {
        Exp e(nv - 1, 0);
        e[v] = 1;
        ell.add_term(e, Rat(from_u64(1 + lrng.below(p - 1))));
      }
      std::vector<PVec> Mp(basis.size(), PVec(basis.size(), 0));
      for (size_t j = 0; j < basis.size(); ++j) {
        QPoly nf = normal_form(ell * monomial_poly(nv - 1, basis[j]), G);
        for (const auto& [e, c] : nf.t) {
          auto it = std::find(basis.begin(), basis.end(), e);
          if (it == basis.end())
            throw std::logic_error("normal form left the quotient basis");
          Mp[it - basis.begin()][j] = mpz_get_ui(Rat(c).get_num().get_mpz_t());
        }
      }
      PVec chi = charpoly_modp(Mp, F);
      if (pgcd_degree_modp(chi, pderiv_modp(chi, F), F) == 0) return true;
      if (++nontrivial == 2) return false;
    }
  }
  return std::nullopt;
}

}  // namespace

GenericityReport hessian_genericity(const CubicForm& f, std::uint64_t seed,
                                    int prime_bits) {
  if (f.poly.is_zero())
    throw std::invalid_argument("hessian_genericity: zero form");
  GenericityReport rep;
  QPoly hd = hessian_det(f);
  if (hd.is_zero()) {
    rep.hessian_vanishes = true;
    rep.dim = f.n - 1;
    return rep;
  }
  std::vector<QPoly> gens = jacobian(hd);
  if (gens.empty())
    throw std::invalid_argument("hessian determinant is constant");
  GBLimits limits;
  Rng prng(seed, "genericity-primes");
  struct Result {
    std::uint64_t p;
    int dim, deg;
    bool distinct;
  };
  std::vector<Result> results;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::uint64_t p = random_prime(prime_bits, prng);
    bool dup = false;
    for (const auto& r : results) dup |= (r.p == p);
    if (dup) continue;
    Result cur{p, 0, 0, false};
    try {
      GroebnerBasis G = buchberger(Ideal{f.n, MonomialOrder::Grevlex, p, gens},
                                   limits);
      auto [dim, deg] = dim_degree(G);
      cur.dim = dim;
      cur.deg = dim >= 0 ? deg : 0;
      if (dim == 0) {
        auto d = distinct_modp(gens, f.n, p, deg, seed, limits);
        if (!d) continue;
        cur.distinct = *d;
      }
    } catch (const std::domain_error&) {
      continue;  // unlucky prime divided a denominator
    }
    for (const auto& r : results)
      if (r.dim == cur.dim && r.deg == cur.deg && r.distinct == cur.distinct) {
        rep.dim = cur.dim;
        rep.degree = cur.deg;
        rep.distinct = cur.distinct;
        rep.primes = {r.p, cur.p};
        return rep;
      }
    results.push_back(cur);
  }
  throw ResourceCap("hessian genericity: modular results failed to stabilize");
}

// ------------------------------------------------------- invariant handling

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string invariant_digest(const InvariantData& inv) {
  std::ostringstream os;
  os << inv.name << '|' << inv.nv << '|' << inv.degree << '\n';
  for (const auto& [e, c] : inv.poly.t) {
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ':' << Rat(c).get_num().get_str() << '\n';
  }
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

// all exponent vectors of the given total degree, lex ascending
void enumerate_degree_rec(int nv, int d, Exp& cur, std::vector<Exp>& out) {
  if ((int)cur.size() == nv - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= d; ++a) {
    cur.push_back(a);
    enumerate_degree_rec(nv, d - a, cur, out);
    cur.pop_back();
  }
}

std::vector<Exp> enumerate_degree(int nv, int d) {
  std::vector<Exp> out;
  Exp cur;
  enumerate_degree_rec(nv, d, cur, out);
  return out;
}

std::vector<Rat> coeff_vector(const CubicForm& f, const std::vector<Exp>& exps) {
  std::vector<Rat> v(exps.size());
  for (size_t i = 0; i < exps.size(); ++i)
    v[i] = f.poly.coeff(exps[i]).as_rat();
  return v;
}

InvariantData interpolate_on_cubes(const std::string& name, int n, int ncubes,
                                   const std::vector<Exp>& monomials,
                                   int samples, std::uint64_t seed,
                                   const std::string& label, bool parallel) {
  std::vector<Exp> cexp = cubic_exponents(n);
  std::vector<std::vector<Rat>> pts(samples);
  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, label + "-sample-" + std::to_string(s));
    CubicForm f = evaluate_powers(random_cubes(n, ncubes, rng));
    pts[s] = coeff_vector(f, cexp);
  }
  std::vector<mpz_class> coeffs =
      interpolate_vanishing(monomials, pts, seed, parallel);
  InvariantData inv{name, (int)cexp.size(),
                    (int)std::accumulate(monomials[0].begin(),
                                         monomials[0].end(), 0),
                    QPoly((int)cexp.size())};
  for (size_t i = 0; i < monomials.size(); ++i)
    if (coeffs[i] != 0) inv.poly.add_term(monomials[i], Rat(coeffs[i]));
  return inv;
}

}  // namespace

void save_invariant(const InvariantData& inv, const std::string& path) {
  Json j;
  j["name"] = inv.name;
  j["nv"] = inv.nv;
  j["degree"] = inv.degree;
  Json terms = Json::array();
  for (const auto& [e, c] : inv.poly.t) {
    Json t;
    t["exp"] = e;
    t["coeff"] = Rat(c).get_num().get_str();
    terms.push_back(t);
  }
  j["terms"] = std::move(terms);
  j["checksum"] = invariant_digest(inv);
  save_json_file(path, j);
}

InvariantData load_invariant(const std::string& path) {
  Json j = load_json_file(path);
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string() ||
      !j.contains("nv") || !j["nv"].is_number_integer() ||
      !j.contains("degree") || !j["degree"].is_number_integer() ||
      !j.contains("terms") || !j["terms"].is_array() ||
      !j.contains("checksum") || !j["checksum"].is_string())
    throw SchemaError("invariant file " + path + ": malformed envelope");
  InvariantData inv;
  inv.name = j["name"].get<std::string>();
  inv.nv = j["nv"].get<int>();
  inv.degree = j["degree"].get<int>();
  if (inv.nv < 1 || inv.nv > 64 || inv.degree < 1)
    throw SchemaError("invariant file " + path + ": bad dimensions");
  inv.poly = QPoly(inv.nv);
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t["exp"].is_array() ||
        !t.contains("coeff") || !t["coeff"].is_string())
      throw SchemaError("invariant file " + path + ": malformed term");
    if ((int)t["exp"].size() != inv.nv)
      throw SchemaError("invariant file " + path + ": exponent arity");
    Exp e;
    int total = 0;
    for (const Json& x : t["exp"]) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw SchemaError("invariant file " + path + ": bad exponent");
      e.push_back(x.get<int>());
      total += x.get<int>();
    }
    if (total != inv.degree)
      throw SchemaError("invariant file " + path + ": non-homogeneous term");
    mpz_class c;
    if (mpz_set_str(c.get_mpz_t(), t["coeff"].get<std::string>().c_str(), 10))
      throw SchemaError("invariant file " + path + ": bad coefficient");
    if (c == 0) throw SchemaError("invariant file " + path + ": zero term");
    inv.poly.add_term(e, Rat(c));
  }
  if (invariant_digest(inv) != j["checksum"].get<std::string>())
    throw SchemaError("invariant file " + path + ": checksum mismatch");
  return inv;
}

InvariantData build_aronhold(std::uint64_t seed, int samples, bool parallel) {
  std::vector<Exp> monomials = enumerate_degree(10, 4);
  if (samples < (int)monomials.size())
    throw std::invalid_argument("build_aronhold: too few samples");
  return interpolate_on_cubes("aronhold", 3, 3, monomials, samples, seed,
                              "aronhold", parallel);
}

Rat aronhold_eval(const InvariantData& inv, const CubicForm& ternary) {
  if (ternary.n != 3)
    throw std::invalid_argument("aronhold_eval needs a ternary cubic");
  if (inv.nv != 10) throw std::invalid_argument("not an aronhold invariant");
  return inv.poly.eval(coeff_vector(ternary, cubic_exponents(3)));
}

InvariantData load_aronhold() {
  InvariantData inv = load_invariant(data_dir() + "/aronhold_cache.json");
  if (inv.name != "aronhold" || inv.nv != 10 || inv.degree != 4)
    throw SchemaError("aronhold cache: wrong invariant");
  // self-test: vanishes on three cubes, nonzero at xyz
  QPoly fermat(3), xyz(3);
  fermat.add_term({3, 0, 0}, Rat(1));
  fermat.add_term({0, 3, 0}, Rat(1));
  fermat.add_term({0, 0, 3}, Rat(1));
  xyz.add_term({1, 1, 1}, Rat(1));
  if (aronhold_eval(inv, CubicForm(to_fpoly(fermat))) != 0 ||
      aronhold_eval(inv, CubicForm(to_fpoly(xyz))) == 0)
    throw SchemaError("aronhold cache: self-test failed");
  return inv;
}

std::vector<Exp> quintic_weight_support() {
  std::vector<Exp> cexp = cubic_exponents(4);
  std::vector<Exp> out;
  for (const Exp& m : enumerate_degree((int)cexp.size(), 5)) {
    std::array<long, 4> w{0, 0, 0, 0};
    for (size_t i = 0; i < m.size(); ++i)
      for (int v = 0; v < 4; ++v) w[v] += (long)m[i] * cexp[i][v];
    if (w == std::array<long, 4>{2, 4, 4, 5}) out.push_back(m);
  }
  return out;
}

InvariantData build_salmon_quintic(std::uint64_t seed, bool parallel) {
  std::vector<Exp> monomials = quintic_weight_support();
  InvariantData inv =
      interpolate_on_cubes("salmon-quintic", 4, 4, monomials,
                           (int)monomials.size() + 40, seed, "quintic",
                           parallel);
  return inv;
}

Rat salmon_eval(const InvariantData& inv, const CubicForm& quaternary,
                CoeffConvention conv) {
  if (quaternary.n != 4)
    throw std::invalid_argument("salmon_eval needs a quaternary cubic");
  if (inv.nv != 20) throw std::invalid_argument("not a quintic invariant");
  std::vector<Exp> cexp = cubic_exponents(4);
  std::vector<Rat> x(cexp.size());
  for (size_t i = 0; i < cexp.size(); ++i) {
    x[i] = quaternary.poly.coeff(cexp[i]).as_rat();
    if (conv == CoeffConvention::Tensor)
      x[i] /= Rat(multinomial(3, cexp[i]));
  }
  return inv.poly.eval(x);
}

InvariantData load_salmon() {
  InvariantData inv = load_invariant(data_dir() + "/salmon_quintic.json");
  if (inv.name != "salmon-quintic" || inv.nv != 20 || inv.degree != 5)
    throw SchemaError("quintic file: wrong invariant");
  std::vector<Exp> cexp = cubic_exponents(4);
  for (const auto& [m, c] : inv.poly.t) {
    std::array<long, 4> w{0, 0, 0, 0};
    for (size_t i = 0; i < m.size(); ++i)
      for (int v = 0; v < 4; ++v) w[v] += (long)m[i] * cexp[i][v];
    if (w != std::array<long, 4>{2, 4, 4, 5})
      throw SchemaError("quintic file: term outside the weight space");
  }
  QPoly fermat(4);
  for (int v = 0; v < 4; ++v) {
    Exp e(4, 0);
    e[v] = 3;
    fermat.add_term(e, Rat(1));
  }
  if (salmon_eval(inv, CubicForm(to_fpoly(fermat))) != 0)
    throw SchemaError("quintic file: self-test failed");
  return inv;
}

MembershipReport sigma4_membership(const CubicForm& f,
                                   const InvariantData& quintic,
                                   std::uint64_t seed, int trials,
                                   bool parallel) {
  if (f.n != 4)
    throw std::invalid_argument("sigma4_membership needs a quaternary cubic");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::vector<signed char> nonzero(trials, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int t = 0; t < trials; ++t) {
    CubicForm g = f;
    if (t > 0) {
      Rng rng(seed, "sigma4-trial-" + std::to_string(t));
      ExactMatrix M(4, 4);
      do {
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            M.at(i, j) = FieldElement(Rat((long)rng.int_in(-5, 5)));
      } while (det_exact(M).is_zero());
      g = apply_gl(f, M);
    }
    nonzero[t] = salmon_eval(quintic, g) != 0 ? 1 : 0;
  }
  MembershipReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t)
    if (nonzero[t]) {
      rep.member = false;
      rep.witness_trial = t;
      break;
    }
  return rep;
}

// ------------------------------------------------------------------ strassen

namespace {

QMat adjugate3(const QMat& A) {
  QMat adj = qmat(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
    }
  return adj;
}

QMat slice_combo(const std::array<QMat, 3>& S, const std::array<long, 3>& c) {
  QMat A = qmat(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      A[i][j] = Rat(c[0]) * S[0][i][j] + Rat(c[1]) * S[1][i][j] +
                Rat(c[2]) * S[2][i][j];
  return A;
}

std::array<QMat, 3> tensor_slices_33(const GeneralTensor& t) {
  if (t.dims != std::array<int, 3>{3, 3, 3})
    throw std::invalid_argument("strassen test needs a 3x3x3 tensor");
  std::array<QMat, 3> S;
  for (int i = 0; i < 3; ++i) S[i] = to_qmat(t.slice(i));
  return S;
}

QMat invertible_recombination(const std::array<QMat, 3>& S,
                              std::uint64_t seed) {
  Rng rng(seed, "strassen-combo");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::array<long, 3> c;
    for (auto& x : c) x = rng.int_in(-4, 4);
    QMat A = slice_combo(S, c);
    if (qmat_det(A) != 0) return A;
  }
  throw std::domain_error(
      "strassen test: no invertible slice recombination found");
}

QMat commutator(const QMat& X, const QMat& Y) {
  QMat XY = qmat_mul(X, Y), YX = qmat_mul(Y, X);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) XY[i][j] -= YX[i][j];
  return XY;
}

}  // namespace

ExactMatrix strassen_commutator(const GeneralTensor& t, std::uint64_t seed) {
  auto S = tensor_slices_33(t);
  QMat adjA = adjugate3(invertible_recombination(S, seed));
  Rng rng(seed, "strassen-pair");
  std::array<long, 3> cb, cc;
  for (auto& x : cb) x = rng.int_in(-4, 4);
  for (auto& x : cc) x = rng.int_in(-4, 4);
  return to_exact(commutator(qmat_mul(adjA, slice_combo(S, cb)),
                             qmat_mul(adjA, slice_combo(S, cc))));
}

bool strassen_brank3_test(const GeneralTensor& t, std::uint64_t seed) {
  auto S = tensor_slices_33(t);
  QMat adjA = adjugate3(invertible_recombination(S, seed));
  std::array<QMat, 3> N;
  for (int i = 0; i < 3; ++i) N[i] = qmat_mul(adjA, S[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      QMat K = commutator(N[i], N[j]);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (K[r][c] != 0) return false;
    }
  return true;
}

}  // namespace cubicrank
