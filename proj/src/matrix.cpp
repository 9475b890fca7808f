#include "cubicrank/matrix.hpp"

#include <stdexcept>

namespace cubicrank {

int rank_exact(const ExactMatrix& m) {
  if (m.poly_mode)
    throw std::invalid_argument("rank_exact: polynomial-mode input rejected");
  for (auto& e : m.s)
    if (!e.exact())
      throw std::invalid_argument("rank_exact: approximate entries rejected");
  ExactMatrix a = m;
  int rank = 0;
  for (int col = 0; col < a.nc && rank < a.nr; col++) {
    int piv = -1;
    for (int r = rank; r < a.nr; r++)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < a.nc; j++) std::swap(a.at(piv, j), a.at(rank, j));
    FieldElement inv = a.at(rank, col).inverse();
    for (int r = rank + 1; r < a.nr; r++) {
      if (a.at(r, col).is_zero()) continue;
      FieldElement f = a.at(r, col) * inv;
      for (int j = col; j < a.nc; j++)
        a.at(r, j) = a.at(r, j) - f * a.at(rank, j);
    }
    rank++;
  }
  return rank;
}

namespace {

FPoly det_cofactor(const ExactMatrix& m, std::vector<int>& cols, int row) {
  int n = m.nr;
  int nvars = m.p.empty() ? 0 : m.p[0].nv;
  if (row == n) return FPoly::constant(nvars, FieldElement(1));
  FPoly acc(nvars);
  int sign = 1;
  for (size_t k = 0; k < cols.size(); k++) {
    int c = cols[k];
    const FPoly& e = m.pat(row, c);
    if (!e.is_zero()) {
      cols.erase(cols.begin() + k);
      FPoly sub = det_cofactor(m, cols, row + 1);
      cols.insert(cols.begin() + k, c);
      FPoly term = e * sub;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

// Bareiss fraction-free elimination over the polynomial ring; every division
// is exact by the standard identity, so no fractions appear.
FPoly det_bareiss(ExactMatrix a) {
  int n = a.nr;
  int nvars = a.p[0].nv;
  FPoly prev = FPoly::constant(nvars, FieldElement(1));
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (a.pat(k, k).is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; r++)
        if (!a.pat(r, k).is_zero()) { piv = r; break; }
      if (piv < 0) return FPoly(nvars);  // singular
      for (int j = 0; j < n; j++) std::swap(a.pat(piv, j), a.pat(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        FPoly num = a.pat(i, j) * a.pat(k, k) - a.pat(i, k) * a.pat(k, j);
        a.pat(i, j) = divide_exact(num, prev);
      }
    prev = a.pat(k, k);
  }
  FPoly d = a.pat(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

}  // namespace

FPoly det_poly(const ExactMatrix& m) {
  if (!m.poly_mode)
    throw std::invalid_argument("det_poly: expects a polynomial-mode matrix");
  if (m.nr != m.nc) throw std::invalid_argument("det_poly: non-square input");
  if (m.nr == 0) return FPoly::constant(0, FieldElement(1));
  if (m.nr <= 5) {
    std::vector<int> cols(m.nc);
    for (int j = 0; j < m.nc; j++) cols[j] = j;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

FieldElement det_exact(const ExactMatrix& m) {
  if (m.poly_mode) throw std::invalid_argument("det_exact: scalar mode only");
  if (m.nr != m.nc) throw std::invalid_argument("det_exact: non-square");
  ExactMatrix a = m;
  FieldElement det(1);
  for (int k = 0; k < a.nr; k++) {
    int piv = -1;
    for (int r = k; r < a.nr; r++)
      if (!a.at(r, k).is_zero()) { piv = r; break; }
    if (piv < 0) return FieldElement(0);
    if (piv != k) {
      for (int j = 0; j < a.nc; j++) std::swap(a.at(piv, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    FieldElement inv = a.at(k, k).inverse();
    for (int r = k + 1; r < a.nr; r++) {
      if (a.at(r, k).is_zero()) continue;
      FieldElement f = a.at(r, k) * inv;
      for (int j = k; j < a.nc; j++) a.at(r, j) = a.at(r, j) - f * a.at(k, j);
    }
  }
  return det;
}

std::vector<std::vector<FieldElement>> nullspace_exact(const ExactMatrix& m) {
  if (m.poly_mode)
    throw std::invalid_argument("nullspace_exact: scalar mode only");
  ExactMatrix a = m;
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < a.nc && row < a.nr; col++) {
    int piv = -1;
    for (int r = row; r < a.nr; r++)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < a.nc; j++) std::swap(a.at(piv, j), a.at(row, j));
    FieldElement inv = a.at(row, col).inverse();
    for (int j = col; j < a.nc; j++) a.at(row, j) *= inv;
    for (int r = 0; r < a.nr; r++) {
      if (r == row || a.at(r, col).is_zero()) continue;
      FieldElement f = a.at(r, col);
      for (int j = col; j < a.nc; j++)
        a.at(r, j) = a.at(r, j) - f * a.at(row, j);
    }
    pivots.push_back(col);
    row++;
  }
  std::vector<char> is_piv(a.nc, 0);
  for (int c : pivots) is_piv[c] = 1;
  std::vector<std::vector<FieldElement>> basis;
  for (int freec = 0; freec < a.nc; freec++) {
    if (is_piv[freec]) continue;
    std::vector<FieldElement> v(a.nc, FieldElement(0));
    v[freec] = FieldElement(1);
    for (size_t r = 0; r < pivots.size(); r++)
      v[pivots[r]] = -a.at((int)r, freec);
    basis.push_back(v);
  }
  return basis;
}

std::optional<ExactMatrix> inverse_exact(const ExactMatrix& m) {
  if (m.poly_mode || m.nr != m.nc)
    throw std::invalid_argument("inverse_exact: square scalar matrix expected");
  int n = m.nr;
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (!a.at(r, k).is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != k)
      for (int j = 0; j < n; j++) {
        std::swap(a.at(piv, j), a.at(k, j));
        std::swap(inv.at(piv, j), inv.at(k, j));
      }
    FieldElement d = a.at(k, k).inverse();
    for (int j = 0; j < n; j++) { a.at(k, j) *= d; inv.at(k, j) *= d; }
    for (int r = 0; r < n; r++) {
      if (r == k || a.at(r, k).is_zero()) continue;
      FieldElement f = a.at(r, k);
      for (int j = 0; j < n; j++) {
        a.at(r, j) = a.at(r, j) - f * a.at(k, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(k, j);
      }
    }
  }
  return inv;
}

QMat qmat(int r, int c) { return QMat(r, QVec(c, Rat(0))); }

QMat qmat_identity(int n) {
  QMat a = qmat(n, n);
  for (int i = 0; i < n; i++) a[i][i] = 1;
  return a;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  int n = a.size(), m = b[0].size(), k = b.size();
  QMat c = qmat(n, m);
  for (int i = 0; i < n; i++)
    for (int l = 0; l < k; l++) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; j++) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

namespace {
// row echelon in place; returns pivot columns
std::vector<int> echelon(QMat& a) {
  int nr = a.size(), nc = nr ? a[0].size() : 0, row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < nc && row < nr; col++) {
    int piv = -1;
    for (int r = row; r < nr; r++)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Rat inv = 1 / a[row][col];
    for (int j = col; j < nc; j++) a[row][j] *= inv;
    for (int r = 0; r < nr; r++) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = col; j < nc; j++) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    row++;
  }
  return pivots;
}
}  // namespace

int qmat_rank(QMat a) { return (int)echelon(a).size(); }

Rat qmat_det(QMat a) {
  int n = a.size();
  Rat det = 1;
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != k) { std::swap(a[piv], a[k]); det = -det; }
    det *= a[k][k];
    Rat inv = 1 / a[k][k];
    for (int r = k + 1; r < n; r++) {
      if (a[r][k] == 0) continue;
      Rat f = a[r][k] * inv;
      for (int j = k; j < n; j++) a[r][j] -= f * a[k][j];
    }
  }
  return det;
}

std::optional<QMat> qmat_inverse(const QMat& m) {
  int n = m.size();
  QMat a = m;
  QMat inv = qmat_identity(n);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[k]);
    std::swap(inv[piv], inv[k]);
    Rat d = 1 / a[k][k];
    for (int j = 0; j < n; j++) { a[k][j] *= d; inv[k][j] *= d; }
    for (int r = 0; r < n; r++) {
      if (r == k || a[r][k] == 0) continue;
      Rat f = a[r][k];
      for (int j = 0; j < n; j++) {
        a[r][j] -= f * a[k][j];
        inv[r][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

std::optional<QVec> qmat_solve(const QMat& a, const QVec& b) {
  int nr = a.size(), nc = nr ? a[0].size() : 0;
  QMat aug = a;
  for (int i = 0; i < nr; i++) aug[i].push_back(b[i]);
  std::vector<int> pivots = echelon(aug);
  // inconsistent iff a pivot lands in the augmented column
  for (int c : pivots)
    if (c == nc) return std::nullopt;
  QVec x(nc, Rat(0));
  for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = aug[r][nc];
  return x;
}

std::vector<QVec> qmat_nullspace(const QMat& m) {
  QMat a = m;
  int nc = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = echelon(a);
  std::vector<char> is_piv(nc, 0);
  for (int c : pivots) is_piv[c] = 1;
  std::vector<QVec> basis;
  for (int freec = 0; freec < nc; freec++) {
    if (is_piv[freec]) continue;
    QVec v(nc, Rat(0));
    v[freec] = 1;
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -a[r][freec];
    basis.push_back(v);
  }
  return basis;
}

ExactMatrix to_exact(const QMat& a) {
  ExactMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (int i = 0; i < m.nr; i++)
    for (int j = 0; j < m.nc; j++) m.at(i, j) = FieldElement(a[i][j]);
  return m;
}

QMat to_qmat(const ExactMatrix& m) {
  if (m.poly_mode) throw std::invalid_argument("to_qmat: scalar mode only");
  QMat a = qmat(m.nr, m.nc);
  for (int i = 0; i < m.nr; i++)
    for (int j = 0; j < m.nc; j++) a[i][j] = m.at(i, j).as_rat();
  return a;
}

std::vector<Rat> char_poly_coeffs(const QMat& a) {
  int n = a.size();
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMat M = a;
  for (int k = 1; k <= n; k++) {
    if (k > 1) {
      QMat N = M;
      for (int i = 0; i < n; i++) N[i][i] += c[n - k + 1];
      M = qmat_mul(a, N);
    }
    Rat tr = 0;
    for (int i = 0; i < n; i++) tr += M[i][i];
    c[n - k] = -tr / k;
  }
  return c;
}

QPoly char_poly(const ExactMatrix& m) {
  if (m.poly_mode || m.nr != m.nc)
    throw std::invalid_argument("char_poly: square scalar matrix expected");
  auto c = char_poly_coeffs(to_qmat(m));
  QPoly p(1);
  for (size_t k = 0; k < c.size(); k++) p.add_term(Exp{(int)k}, c[k]);
  return p;
}

}  // namespace cubicrank
