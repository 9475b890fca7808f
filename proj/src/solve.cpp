#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cubicrank/groebner.hpp"
#include "cubicrank/roots.hpp"

namespace cubicrank {

namespace {

// x = M y with rows as substitution coefficients (x_i -> sum_j M[i][j] y_j)
std::vector<QPoly> transform_gens(const std::vector<QPoly>& gens,
                                  const QMat& M) {
  std::vector<QPoly> out;
  for (auto& g : gens) out.push_back(g.subst_linear(M));
  return out;
}

QMat chart_transform(int n, int attempt, std::uint64_t seed) {
  if (attempt < n) {
    // bring coordinate n-1-attempt to the last slot
    QMat P = qmat_identity(n);
    int k = n - 1 - attempt;
    if (k != n - 1) {
      P[k][k] = 0;
      P[n - 1][n - 1] = 0;
      P[k][n - 1] = 1;
      P[n - 1][k] = 1;
    }
    return P;
  }
  Rng rng(seed, "chart", (std::uint64_t)attempt);
  for (;;) {
    QMat M = qmat(n, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) M[i][j] = random_rat(rng, 3);
    if (qmat_det(M) != 0) return M;
  }
}

struct RecoveredPoint {
  std::vector<Cx> y;  // affine coordinates, length nv-1
  int multiplicity;
};

}  // namespace

SolveResult quotient_solve(const GroebnerBasis& G, const SolveOptions& opt,
                           const GBLimits& limits) {
  if (G.prime != 0)
    throw std::invalid_argument("quotient_solve: rational basis required");
  int n = G.nv;
  if (n < 2)
    throw std::invalid_argument("quotient_solve: at least 2 variables");
  auto [pdim, pdeg] = dim_degree(G);
  if (pdim > 0)
    throw std::invalid_argument("quotient_solve: positive-dimensional input");
  if (pdim < 0)
    throw std::invalid_argument("quotient_solve: empty projective scheme");

  int max_attempts = n + 5;
  for (int attempt = 0; attempt < max_attempts; attempt++) {
    QMat M = chart_transform(n, attempt, opt.seed);
    std::vector<QPoly> mixed = transform_gens(G.polys, M);

    // dehomogenize at the last variable
    std::vector<QPoly> affine;
    bool unit = false;
    for (auto& g : mixed) {
      QPoly h = g.subst_const(n - 1, Rat(1)).restrict_vars(n - 1);
      if (h.is_zero()) continue;
      if (h.degree() == 0) { unit = true; break; }
      affine.push_back(h);
    }
    if (unit || affine.empty()) continue;

    GroebnerBasis AG;
    std::vector<Exp> basis;
    try {
      Ideal I{n - 1, MonomialOrder::Grevlex, 0, affine};
      AG = buchberger(I, limits);
      basis = quotient_basis(AG);
    } catch (const std::invalid_argument&) {
      continue;  // chart lost points to infinity badly enough to be non-finite
    }
    if ((int)basis.size() != pdeg) continue;

    int m = (int)basis.size();
    int one_idx = -1;
    for (int i = 0; i < m; i++)
      if (exp_total(basis[i]) == 0) one_idx = i;
    if (one_idx < 0) continue;

    // exact coordinate functionals: NF(y_i) in basis coordinates
    std::vector<std::vector<Cx>> coord_vec(n - 1,
                                           std::vector<Cx>(m, Cx(0, 0)));
    {
      std::map<Exp, int> index;
      for (int i = 0; i < m; i++) index[basis[i]] = i;
      for (int v = 0; v < n - 1; v++) {
        QPoly nf = normal_form(QPoly::variable(n - 1, v), AG);
        for (auto& [e, c] : nf.t) coord_vec[v][index.at(e)] = Cx(c.get_d(), 0);
      }
    }

    const int max_elltry = 4;
    for (int elltry = 0; elltry < max_elltry; elltry++) {
      Rng lrng(opt.seed, "ell", (std::uint64_t)(attempt * 16 + elltry));
      QPoly ell(n - 1);
      for (int v = 0; v < n - 1; v++) {
        Rat c = random_rat(lrng, 60);
        if (c != 0) {
          Exp e(n - 1, 0);
          e[v] = 1;
          ell.add_term(e, c);
        }
      }
      if (ell.is_zero()) continue;

      QMat Mul = multiplication_matrix(AG, ell, basis);
      UPoly chi(char_poly_coeffs(Mul));
      UPoly dchi = uderiv(chi);
      bool distinct = dchi.empty() ? (udeg(chi) <= 1)
                                   : udeg(ugcd(chi, dchi)) <= 0;
      // a repeated eigenvalue is usually the separating form colliding on
      // distinct points; retry with a fresh form, and only accept a
      // non-squarefree char poly on the last try (genuinely fat points)
      if (!distinct && elltry + 1 < max_elltry) continue;

      std::vector<std::pair<Cx, int>> eigs;
      try {
        eigs = complex_roots(chi, opt.seed + 17 * elltry, 1e-13, 600);
      } catch (const ConvergenceFailure&) {
        continue;
      }

      // clustered distinct eigenvalues make eigenvector recovery meaningless
      bool clustered = false;
      for (size_t a = 0; a < eigs.size() && !clustered; a++)
        for (size_t b = a + 1; b < eigs.size() && !clustered; b++)
          if (std::abs(eigs[a].first - eigs[b].first) < opt.tol)
            clustered = true;
      if (clustered) continue;

      Eigen::MatrixXcd Mt(m, m);
      for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) Mt(i, j) = Cx(Mul[j][i].get_d(), 0);

      std::vector<RecoveredPoint> recovered;
      bool ok = true;
      for (auto& [lam, mult] : eigs) {
        Eigen::MatrixXcd A = Mt - lam * Eigen::MatrixXcd::Identity(m, m);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
        Eigen::VectorXcd w = svd.matrixV().col(m - 1);
        Cx w0 = w(one_idx);
        if (std::abs(w0) < 1e-8) { ok = false; break; }
        RecoveredPoint pt;
        pt.multiplicity = mult;
        for (int v = 0; v < n - 1; v++) {
          Cx s(0, 0);
          for (int i = 0; i < m; i++) s += coord_vec[v][i] * w(i);
          pt.y.push_back(s / w0);
        }
        recovered.push_back(pt);
      }
      if (!ok) continue;

      // back-map, normalize, verify against the input basis polynomials
      SolveResult res;
      res.distinct = distinct;
      res.chart_attempts = attempt + 1;
      for (auto& pt : recovered) {
        std::vector<Cx> y(n);
        for (int v = 0; v < n - 1; v++) y[v] = pt.y[v];
        y[n - 1] = Cx(1, 0);
        std::vector<Cx> x(n, Cx(0, 0));
        for (int i = 0; i < n; i++)
          for (int j = 0; j < n; j++) x[i] += Cx(M[i][j].get_d(), 0) * y[j];
        int arg = 0;
        for (int i = 1; i < n; i++)
          if (std::abs(x[i]) > std::abs(x[arg])) arg = i;
        if (std::abs(x[arg]) == 0) { ok = false; break; }
        Cx piv = x[arg];
        for (int i = 0; i < n; i++) x[i] /= piv;
        ProjPoint p;
        p.coords = x;
        p.multiplicity = pt.multiplicity;
        res.points.push_back(p);
      }
      if (!ok) continue;

      bool verified = true;
      for (auto& p : res.points) {
        std::vector<FieldElement> at;
        for (auto& c : p.coords) at.push_back(FieldElement(c));
        for (auto& g : G.polys) {
          double scale = 0;
          for (auto& [e, c] : g.t) scale += std::abs(c.get_d());
          Cx val = to_fpoly(g).eval(at).to_complex();
          if (std::abs(val) > 1e3 * opt.tol * std::max(1.0, scale)) {
            verified = false;
            break;
          }
        }
        if (!verified) break;
      }
      if (!verified) continue;

      std::sort(res.points.begin(), res.points.end(),
                [](const ProjPoint& a, const ProjPoint& b) {
                  for (size_t i = 0; i < a.coords.size(); i++) {
                    if (a.coords[i].real() != b.coords[i].real())
                      return a.coords[i].real() < b.coords[i].real();
                    if (a.coords[i].imag() != b.coords[i].imag())
                      return a.coords[i].imag() < b.coords[i].imag();
                  }
                  return false;
                });
      return res;
    }
  }
  throw IllConditioned(
      "quotient_solve: no chart and multiplier separated the points; "
      "try a different seed");
}

}  // namespace cubicrank
