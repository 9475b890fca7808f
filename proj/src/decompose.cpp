#include "cubicrank/decompose.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "cubicrank/groebner.hpp"
#include "cubicrank/invariants.hpp"
#include "cubicrank/rng.hpp"

namespace cubicrank {

namespace {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

std::vector<Cx> tensor_complex(const CubicForm& f) {
  int n = f.n;
  std::vector<Cx> t((size_t)n * n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++)
        t[((size_t)i * n + j) * n + k] = f.tensor_entry(i, j, k).to_complex();
  return t;
}

double frob(const std::vector<Cx>& t) {
  double s = 0;
  for (const Cx& z : t) s += std::norm(z);
  return std::sqrt(s);
}

// best rational approximation with denominator <= max_den (continued
// fractions); nullopt when the residual error stays above tol
std::optional<Rat> rat_approx(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; it++) {
    double fl = std::floor(v);
    if (fl > 1e15 || fl < -1e15) break;
    long a = (long)fl;
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = v - fl;
    if (rem < 1e-14) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(x - (double)p1 / (double)q1) > tol) return std::nullopt;
  Rat r(p1, q1);
  r.canonicalize();
  return r;
}

// the 20-entry coefficient vector of (sum_a l[a] x_a)^3 over cubic_exponents
std::vector<Cx> cube_coeffs_numeric(const std::vector<Cx>& l,
                                    const std::vector<Exp>& exps) {
  std::vector<Cx> out;
  out.reserve(exps.size());
  for (const Exp& e : exps) {
    Cx v((double)multinomial(3, e).get_d(), 0.0);
    for (size_t a = 0; a < l.size(); a++)
      for (int k = 0; k < e[a]; k++) v *= l[a];
    out.push_back(v);
  }
  return out;
}

QPoly cube_poly_exact(const std::vector<Rat>& l) {
  int n = (int)l.size();
  QPoly lin(n);
  for (int a = 0; a < n; a++)
    lin.add_term([&] { Exp e(n, 0); e[a] = 1; return e; }(), l[a]);
  return lin * lin * lin;
}

// ---------------------------------------------------------------- ALS ----

CMat unfold(const std::vector<Cx>& t, int n, int mode) {
  CMat m(n, n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) {
        Cx v = t[((size_t)i * n + j) * n + k];
        if (mode == 0) m(i, j * n + k) = v;
        else if (mode == 1) m(j, i * n + k) = v;
        else m(k, i * n + j) = v;
      }
  return m;
}

// Khatri-Rao product with row (j*n + k) = X(j,:) .* Y(k,:)
CMat khatri_rao(const CMat& X, const CMat& Y) {
  int n = X.rows(), r = X.cols();
  CMat m(n * n, r);
  for (int j = 0; j < n; j++)
    for (int k = 0; k < n; k++)
      for (int c = 0; c < r; c++) m(j * n + k, c) = X(j, c) * Y(k, c);
  return m;
}

double model_residual(const CMat& T1, const CMat& A, const CMat& B,
                      const CMat& C, double nrm) {
  return (T1 - A * khatri_rao(B, C).transpose()).norm() / nrm;
}

struct AlsState {
  CMat P;                // one unit column per term of the symmetric model
  Eigen::VectorXcd lam;  // term coefficients
  double residual = 1.0;  // relative residual; 1 is the empty model
};

void run_als(const std::vector<CMat>& unf, CMat& A, CMat& B, CMat& C,
             double nrm, int iters) {
  int r = (int)A.cols();
  double prev = 2.0;
  for (int it = 0; it < iters; it++) {
    A = unf[0] * khatri_rao(B, C).completeOrthogonalDecomposition()
                     .pseudoInverse()
                     .transpose();
    B = unf[1] * khatri_rao(A, C).completeOrthogonalDecomposition()
                     .pseudoInverse()
                     .transpose();
    C = unf[2] * khatri_rao(A, B).completeOrthogonalDecomposition()
                     .pseudoInverse()
                     .transpose();
    // rebalance column norms across the three factors; the rank-one terms
    // are unchanged but the least-squares subproblems stay well conditioned
    for (int j = 0; j < r; j++) {
      double na = A.col(j).norm(), nb = B.col(j).norm(), nc = C.col(j).norm();
      if (na == 0 || nb == 0 || nc == 0) continue;
      double g = std::cbrt(na * nb * nc);
      A.col(j) *= g / na;
      B.col(j) *= g / nb;
      C.col(j) *= g / nc;
    }
    double res = model_residual(unf[0], A, B, C, nrm);
    if (res < 1e-15 ||
        (std::abs(prev - res) < 1e-15 * (1.0 + res) && it > 8))
      break;
    prev = res;
  }
}

// best symmetric model extractable from an unsymmetric iterate: per column
// the dominant shared direction of the three factors, then one least-squares
// refit of all term coefficients against the full tensor
AlsState symmetrize(const CMat& A, const CMat& B, const CMat& C,
                    const CMat& T1, bool complex_field, double nrm) {
  int n = (int)A.rows(), r = (int)A.cols();
  AlsState st;
  st.P = CMat(n, r);
  for (int c = 0; c < r; c++) {
    Eigen::MatrixXcd col3(n, 3);
    double na = A.col(c).norm(), nb = B.col(c).norm(), nc = C.col(c).norm();
    col3.col(0) = na > 0 ? CMat(A.col(c) / na) : CMat(A.col(c));
    col3.col(1) = nb > 0 ? CMat(B.col(c) / nb) : CMat(B.col(c));
    col3.col(2) = nc > 0 ? CMat(C.col(c) / nc) : CMat(C.col(c));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(col3, Eigen::ComputeFullU);
    Eigen::VectorXcd u = svd.matrixU().col(0);
    int mx = 0;
    for (int i = 1; i < n; i++)
      if (std::abs(u(i)) > std::abs(u(mx))) mx = i;
    if (std::abs(u(mx)) > 0) u *= std::conj(u(mx)) / std::abs(u(mx));
    if (!complex_field)
      for (int i = 0; i < n; i++) u(i) = Cx(u(i).real(), 0.0);
    st.P.col(c) = u;
  }
  CMat D(n * n * n, r);
  Eigen::VectorXcd rhs(n * n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) {
        int row = (i * n + j) * n + k;
        rhs(row) = T1(i, j * n + k);
        for (int c = 0; c < r; c++)
          D(row, c) = st.P(i, c) * st.P(j, c) * st.P(k, c);
      }
  st.lam = D.completeOrthogonalDecomposition().solve(rhs);
  if (!complex_field)
    for (int c = 0; c < r; c++) st.lam(c) = Cx(st.lam(c).real(), 0.0);
  st.residual = (rhs - D * st.lam).norm() / nrm;
  return st;
}

// one restart: grow the model a term at a time; each stage runs ALS from a
// warm start extending the best model so far and from a fresh full-size
// start, keeps whichever symmetric model fits best, and never discards the
// previous stage's model, so for a fixed seed schedule the reported residual
// is non-increasing in the requested rank
AlsState als_restart(const std::vector<CMat>& unf, int n, int rank,
                     bool complex_field, double nrm, Rng& rng, int iters) {
  auto drawmat = [&](CMat& M) {
    for (int c = 0; c < M.cols(); c++)
      for (int i = 0; i < M.rows(); i++) {
        double re = (double)rng.int_in(-1000, 1000) / 1000.0;
        double im = (double)rng.int_in(-1000, 1000) / 1000.0;
        M(i, c) = complex_field ? Cx(re, im) : Cx(re, 0.0);
      }
  };
  AlsState best;
  best.P = CMat(n, 0);
  best.lam = Eigen::VectorXcd(0);
  best.residual = 1.0;
  for (int s = 1; s <= rank; s++) {
    CMat A1(n, s), B1(n, s), C1(n, s), A2(n, s), B2(n, s), C2(n, s);
    drawmat(A1);
    drawmat(B1);
    drawmat(C1);
    drawmat(A2);
    drawmat(B2);
    drawmat(C2);
    int pc = std::min<int>((int)best.P.cols(), s);
    for (int c = 0; c < pc; c++) {
      Cx sc = std::abs(best.lam(c)) == 0
                  ? Cx(0, 0)
                  : (complex_field
                         ? std::pow(best.lam(c), Cx(1.0 / 3.0, 0.0))
                         : Cx(std::cbrt(best.lam(c).real()), 0.0));
      A1.col(c) = sc * best.P.col(c);
      B1.col(c) = A1.col(c);
      C1.col(c) = A1.col(c);
    }
    for (int cand = 0; cand < 2; cand++) {
      CMat A = cand ? A2 : A1, B = cand ? B2 : B1, C = cand ? C2 : C1;
      run_als(unf, A, B, C, nrm, iters);
      AlsState sym = symmetrize(A, B, C, unf[0], complex_field, nrm);
      if (sym.residual < best.residual) best = sym;
    }
  }
  return best;
}

}  // namespace

Json pentahedron_to_json(const Pentahedron& p) {
  Json j;
  auto cvec = [](const std::vector<Cx>& v) {
    Json a = Json::array();
    for (const Cx& z : v) a.push_back(Json::array({z.real(), z.imag()}));
    return a;
  };
  j["points"] = Json::array();
  for (auto& pt : p.points) j["points"].push_back(cvec(pt));
  j["planes"] = Json::array();
  for (auto& pl : p.planes) j["planes"].push_back(cvec(pl));
  if (!p.planes_exact.empty()) {
    j["planes_exact"] = Json::array();
    for (auto& pl : p.planes_exact) {
      Json a = Json::array();
      for (const Rat& r : pl) a.push_back(r.get_str());
      j["planes_exact"].push_back(a);
    }
  }
  j["incidence"] = p.incidence;
  return j;
}

SylvesterResult sylvester_decompose(const CubicForm& f, double tol,
                                    std::uint64_t seed) {
  if (f.n != 4)
    throw std::invalid_argument("pentahedral decomposition needs 4 variables");
  QPoly H = hessian_det(f);
  if (H.is_zero())
    throw DegenerateError("hessian", "Hessian determinant vanishes identically");

  Ideal I;
  I.nv = 4;
  I.order = MonomialOrder::Grevlex;
  for (int a = 0; a < 4; a++) {
    QPoly d = H.derivative(a);
    if (!d.is_zero()) I.gens.push_back(d);
  }
  GroebnerBasis G = buchberger(I);
  auto [dim, deg] = dim_degree(G);
  if (dim != 0)
    throw DegenerateError("hessian-singular-locus",
                          "positive-dimensional Hessian singular locus (dim " +
                              std::to_string(dim) + ")");
  if (deg != 10)
    throw DegenerateError("hessian-singular-locus",
                          "expected 10 singular points, ideal degree is " +
                              std::to_string(deg));

  SolveResult sol = quotient_solve(G, {1e-9, seed});
  if (!sol.distinct)
    throw DegenerateError("point-solve", "singular points are not distinct");
  int npts = 0;
  for (auto& p : sol.points) npts += p.multiplicity;
  if ((int)sol.points.size() != 10 || npts != 10)
    throw DegenerateError("point-solve",
                          "expected 10 simple points, found " +
                              std::to_string(sol.points.size()));

  // planes through >= 6 of the 10 points: rank tests over all 6-subsets
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> idx(6);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      subsets.push_back(idx);
      int i = 5;
      while (i >= 0 && idx[i] == 4 + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < 6; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<std::vector<Cx>> found(subsets.size());
#pragma omp parallel for schedule(static) if (subsets.size() > 1)
  for (long s = 0; s < (long)subsets.size(); s++) {
    CMat M(6, 4);
    for (int r = 0; r < 6; r++)
      for (int c = 0; c < 4; c++) M(r, c) = sol.points[subsets[s][r]].coords[c];
    Eigen::JacobiSVD<CMat> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(3) < 1e-7 * sv(0)) {
      CVec nrml = svd.matrixV().col(3);
      found[s].assign(nrml.data(), nrml.data() + 4);
    }
  }
  Pentahedron pent;
  for (auto& p : sol.points) pent.points.push_back(p.coords);
  for (auto& cand : found) {
    if (cand.empty()) continue;
    // scale so the largest-modulus entry is 1, then dedup projectively
    int mx = 0;
    for (int c = 1; c < 4; c++)
      if (std::abs(cand[c]) > std::abs(cand[mx])) mx = c;
    for (int c = 0; c < 4; c++)
      if (c != mx) cand[c] /= cand[mx];
    cand[mx] = 1.0;
    bool dup = false;
    for (auto& pl : pent.planes) {
      double d = 0;
      for (int c = 0; c < 4; c++) d = std::max(d, std::abs(pl[c] - cand[c]));
      if (d < 1e-6) { dup = true; break; }
    }
    if (!dup) pent.planes.push_back(cand);
  }
  if (pent.planes.size() != 5)
    throw DegenerateError("plane-recovery",
                          "found " + std::to_string(pent.planes.size()) +
                              " hyperplanes through 6 points, expected 5");
  // incidence: each plane through exactly 6 points, each point on 3 planes
  std::vector<int> per_point(10, 0);
  for (auto& pl : pent.planes) {
    std::vector<int> on;
    double pn = 0;
    for (auto& z : pl) pn += std::norm(z);
    pn = std::sqrt(pn);
    for (int p = 0; p < 10; p++) {
      Cx dot = 0;
      double qn = 0;
      for (int c = 0; c < 4; c++) {
        dot += pl[c] * pent.points[p][c];
        qn += std::norm(pent.points[p][c]);
      }
      if (std::abs(dot) < 1e-6 * pn * std::sqrt(qn)) {
        on.push_back(p);
        per_point[p]++;
      }
    }
    if (on.size() != 6)
      throw DegenerateError("plane-recovery", "pentahedron incidence failed");
    pent.incidence.push_back(on);
  }
  for (int p = 0; p < 10; p++)
    if (per_point[p] != 3)
      throw DegenerateError("plane-recovery", "pentahedron incidence failed");

  SylvesterResult out;
  out.pent = pent;
  std::vector<Exp> exps = cubic_exponents(4);
  QPoly fq = to_qpoly(f.poly);

  // exact path: rational reconstruction of every plane, exact multiplier
  // solve, and a full verification gate
  std::vector<std::vector<Rat>> rp;
  for (auto& pl : pent.planes) {
    std::vector<Rat> row;
    for (auto& z : pl) {
      if (std::abs(z.imag()) > 1e-7) break;
      auto r = rat_approx(z.real(), 100000, 1e-6);
      if (!r) break;
      row.push_back(*r);
    }
    if (row.size() != 4) break;
    rp.push_back(row);
  }
  if (rp.size() == 5) {
    QMat A = qmat(20, 5);
    QVec b(20);
    std::vector<QPoly> cubes;
    for (int i = 0; i < 5; i++) cubes.push_back(cube_poly_exact(rp[i]));
    for (int r = 0; r < 20; r++) {
      for (int i = 0; i < 5; i++) A[r][i] = cubes[i].coeff(exps[r]);
      b[r] = fq.coeff(exps[r]);
    }
    if (auto lam = qmat_solve(A, b)) {
      QPoly rec(4);
      for (int i = 0; i < 5; i++) rec = rec + (*lam)[i] * cubes[i];
      if (rec == fq) {
        out.exact = true;
        out.pent.planes_exact = rp;
        out.decomp.kind = DecompKind::SymmetricPowers;
        out.decomp.n = 4;
        out.decomp.field = "Q";
        for (int i = 0; i < 5; i++) {
          DecompTerm t;
          t.coef = FieldElement((*lam)[i]);
          std::vector<FieldElement> v;
          for (const Rat& c : rp[i]) v.push_back(FieldElement(c));
          t.vectors = {v};
          out.decomp.terms.push_back(t);
        }
        return out;
      }
    }
  }

  // numeric fallback: complex least squares for the multipliers
  CMat A(20, 5);
  CVec b(20);
  for (int i = 0; i < 5; i++) {
    std::vector<Cx> cc = cube_coeffs_numeric(pent.planes[i], exps);
    for (int r = 0; r < 20; r++) A(r, i) = cc[r];
  }
  for (int r = 0; r < 20; r++) b(r) = fq.coeff(exps[r]).get_d();
  CVec lam = A.completeOrthogonalDecomposition().solve(b);
  double res = (A * lam - b).norm() / std::max(1e-300, b.norm());
  if (!(res < tol))
    throw DegenerateError("lambda-solve",
                          "multiplier residual " + std::to_string(res) +
                              " exceeds tolerance");
  out.residual = res;
  out.decomp.kind = DecompKind::SymmetricPowers;
  out.decomp.n = 4;
  out.decomp.field = "C";
  for (int i = 0; i < 5; i++) {
    DecompTerm t;
    t.coef = FieldElement(lam(i));
    std::vector<FieldElement> v;
    for (const Cx& z : pent.planes[i]) v.push_back(FieldElement(z));
    t.vectors = {v};
    out.decomp.terms.push_back(t);
  }
  return out;
}

Decomposition realify_pair(const std::vector<FieldElement>& l) {
  if (l.empty()) throw std::invalid_argument("empty linear form");
  int n = (int)l.size();
  bool approx = false;
  long d = 0;
  for (const FieldElement& e : l) {
    if (e.tag() == FieldElement::Tag::Approx) approx = true;
    else if (e.tag() == FieldElement::Tag::Quadratic) {
      if (e.quad_d() > 0)
        throw std::invalid_argument("realify needs an imaginary quadratic");
      if (d != 0 && e.quad_d() != d)
        throw std::invalid_argument("mixed quadratic extensions");
      d = e.quad_d();
    }
  }
  Decomposition out;
  out.n = n;
  out.kind = DecompKind::SymmetricPowers;
  auto push = [&](const FieldElement& c, const std::vector<FieldElement>& v) {
    bool zero = true;
    for (const FieldElement& x : v) zero = zero && x.is_zero();
    if (zero || c.is_zero()) return;
    DecompTerm t;
    t.coef = c;
    t.vectors = {v};
    out.terms.push_back(t);
  };
  if (!approx) {
    if (d == 0) throw std::invalid_argument("linear form is real");
    std::vector<Rat> A, B;
    bool has_imag = false;
    for (const FieldElement& e : l) {
      A.push_back(e.rat_part());
      Rat b = e.tag() == FieldElement::Tag::Quadratic ? e.quad_part() : Rat(0);
      if (b != 0) has_imag = true;
      B.push_back(b);
    }
    if (!has_imag) throw std::invalid_argument("linear form is real");
    // l = A + sqrt(d) B:  l^3 + conj^3 = (2-2d) A^3 + d (A+B)^3 + d (A-B)^3
    out.field = "Q";
    auto vr = [&](std::vector<Rat> v) {
      std::vector<FieldElement> w;
      for (Rat& x : v) w.push_back(FieldElement(x));
      return w;
    };
    std::vector<Rat> P(n), M(n);
    for (int i = 0; i < n; i++) { P[i] = A[i] + B[i]; M[i] = A[i] - B[i]; }
    push(FieldElement(Rat(2 - 2 * d)), vr(A));
    push(FieldElement(Rat(d)), vr(P));
    push(FieldElement(Rat(d)), vr(M));
    return out;
  }
  std::vector<double> A, B;
  bool has_imag = false;
  for (const FieldElement& e : l) {
    Cx z = e.to_complex();
    A.push_back(z.real());
    B.push_back(z.imag());
    if (z.imag() != 0.0) has_imag = true;
  }
  if (!has_imag) throw std::invalid_argument("linear form is real");
  out.field = "R";
  auto vd = [&](const std::vector<double>& v) {
    std::vector<FieldElement> w;
    for (double x : v) w.push_back(FieldElement(Cx(x, 0.0)));
    return w;
  };
  std::vector<double> P(n), M(n);
  for (int i = 0; i < n; i++) { P[i] = A[i] + B[i]; M[i] = A[i] - B[i]; }
  push(FieldElement(Cx(4.0, 0.0)), vd(A));
  push(FieldElement(Cx(-1.0, 0.0)), vd(P));
  push(FieldElement(Cx(-1.0, 0.0)), vd(M));
  return out;
}

VerifyResult verify_decomposition(const CubicForm& f, const Decomposition& d,
                                  double tol) {
  d.validate();
  if (d.n != f.n) throw std::invalid_argument("dimension mismatch");
  bool exact = true;
  for (const DecompTerm& t : d.terms) {
    exact = exact && t.coef.exact();
    for (auto& v : t.vectors)
      for (const FieldElement& x : v) exact = exact && x.exact();
  }
  VerifyResult out;
  out.exact = exact;
  if (exact) {
    bool eq;
    if (d.kind == DecompKind::SymmetricPowers) {
      eq = evaluate_powers(d) == f;
    } else {
      GeneralTensor t = evaluate_triples(d);
      GeneralTensor ft = embed_general(f);
      eq = t.dims == ft.dims;
      for (size_t i = 0; eq && i < t.a.size(); i++) eq = t.a[i] == ft.a[i];
    }
    out.ok = eq;
    out.residual = 0.0;
    if (eq) return out;
  }
  // numeric comparison (also the diagnostic for failed exact checks)
  int n = f.n;
  std::vector<Cx> tf = tensor_complex(f), td((size_t)n * n * n, Cx(0));
  for (const DecompTerm& t : d.terms) {
    Cx c = t.coef.to_complex();
    std::vector<std::vector<Cx>> v;
    for (auto& w : t.vectors) {
      std::vector<Cx> z;
      for (const FieldElement& x : w) z.push_back(x.to_complex());
      v.push_back(z);
    }
    const std::vector<Cx>& v1 = v[0];
    const std::vector<Cx>& v2 = v.size() > 1 ? v[1] : v[0];
    const std::vector<Cx>& v3 = v.size() > 2 ? v[2] : v[0];
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        for (int k = 0; k < n; k++)
          td[((size_t)i * n + j) * n + k] += c * v1[i] * v2[j] * v3[k];
  }
  double nrm = std::max(1e-300, frob(tf));
  double s = 0;
  for (size_t i = 0; i < tf.size(); i++) s += std::norm(tf[i] - td[i]);
  out.residual = std::sqrt(s) / nrm;
  if (!exact) out.ok = out.residual < tol;
  return out;
}

Json fit_to_json(const FitResult& r) {
  Json j;
  j["rank"] = r.rank;
  j["residual"] = r.residual;
  j["restarts"] = r.restarts;
  j["seed"] = r.seed;
  j["decomposition"] = decomposition_to_json(r.decomp);
  return j;
}

FitResult als_fit(const CubicForm& f, int rank, bool complex_field,
                  int restarts, std::uint64_t seed, bool parallel, int iters) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (iters < 1) throw std::invalid_argument("iters must be >= 1");
  int n = f.n;
  std::vector<Cx> t = tensor_complex(f);
  double nrm = std::max(1e-300, frob(t));
  std::vector<CMat> unf = {unfold(t, n, 0), unfold(t, n, 1), unfold(t, n, 2)};

  std::vector<AlsState> states(restarts);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < restarts; k++) {
    Rng rng(seed, "als-restart-" + std::to_string(k));
    states[k] = als_restart(unf, n, rank, complex_field, nrm, rng, iters);
  }
  int best = 0;
  for (int k = 1; k < restarts; k++)
    if (states[k].residual < states[best].residual) best = k;

  FitResult out;
  out.rank = rank;
  out.residual = states[best].residual;
  out.restarts = restarts;
  out.seed = seed;
  out.decomp.kind = DecompKind::SymmetricPowers;
  out.decomp.n = n;
  out.decomp.field = complex_field ? "C" : "R";
  for (int c = 0; c < (int)states[best].P.cols(); c++) {
    DecompTerm tm;
    tm.coef = FieldElement(states[best].lam(c));
    std::vector<FieldElement> v;
    for (int i = 0; i < n; i++) v.push_back(FieldElement(states[best].P(i, c)));
    tm.vectors = {v};
    out.decomp.terms.push_back(tm);
  }
  return out;
}

}  // namespace cubicrank
