#pragma once
#include <optional>
#include <vector>

#include "cubicrank/poly.hpp"

namespace cubicrank {

// Dense exact matrix.  Scalar mode holds FieldElements, polynomial mode holds
// sparse polynomials (used for lambda-symbolic slices and Hessians).
struct ExactMatrix {
  int nr = 0, nc = 0;
  bool poly_mode = false;
  std::vector<FieldElement> s;  // scalar entries, row-major
  std::vector<FPoly> p;         // polynomial entries, row-major

  ExactMatrix() = default;
  ExactMatrix(int rows, int cols)
      : nr(rows), nc(cols), s((size_t)rows * cols) {}
  static ExactMatrix poly(int rows, int cols, int nvars) {
    ExactMatrix m;
    m.nr = rows;
    m.nc = cols;
    m.poly_mode = true;
    m.p.assign((size_t)rows * cols, FPoly(nvars));
    return m;
  }
  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = FieldElement(1);
    return m;
  }

  FieldElement& at(int i, int j) { return s[(size_t)i * nc + j]; }
  const FieldElement& at(int i, int j) const { return s[(size_t)i * nc + j]; }
  FPoly& pat(int i, int j) { return p[(size_t)i * nc + j]; }
  const FPoly& pat(int i, int j) const { return p[(size_t)i * nc + j]; }
};

// rank by exact elimination; rejects polynomial mode and approximate scalars
int rank_exact(const ExactMatrix& m);

// exact determinant of a polynomial-mode matrix (minor expansion <= 5x5,
// fraction-free elimination above)
FPoly det_poly(const ExactMatrix& m);

// determinant of a scalar exact matrix
FieldElement det_exact(const ExactMatrix& m);

// basis of the right null space of a scalar exact matrix
std::vector<std::vector<FieldElement>> nullspace_exact(const ExactMatrix& m);

// inverse of a scalar exact matrix, or nullopt when singular
std::optional<ExactMatrix> inverse_exact(const ExactMatrix& m);

// --- dense rational matrices (internal workhorse) ---
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

QMat qmat(int r, int c);
QMat qmat_identity(int n);
QMat qmat_mul(const QMat& a, const QMat& b);
int qmat_rank(QMat a);
Rat qmat_det(QMat a);
std::optional<QMat> qmat_inverse(const QMat& a);
// one solution of A x = b, or nullopt when inconsistent
std::optional<QVec> qmat_solve(const QMat& a, const QVec& b);
// basis of the right null space
std::vector<QVec> qmat_nullspace(const QMat& a);

ExactMatrix to_exact(const QMat& a);
QMat to_qmat(const ExactMatrix& a);

// characteristic polynomial (monic, univariate in one fresh variable) of a
// scalar rational matrix, by the Faddeev-LeVerrier recurrence
QPoly char_poly(const ExactMatrix& m);
std::vector<Rat> char_poly_coeffs(const QMat& a);  // low-to-high degree

}  // namespace cubicrank
