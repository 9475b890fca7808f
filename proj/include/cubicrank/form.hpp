#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "cubicrank/matrix.hpp"

namespace cubicrank {

// Homogeneous cubic in n variables.  The polynomial stores the coefficients
// c_e; the symmetric-tensor view T_{ijk} = c_e / multinomial(3; e) is exposed
// through tensor_entry / embed_general.
struct CubicForm {
  int n = 0;
  FPoly poly;

  CubicForm() = default;
  explicit CubicForm(const FPoly& p) : n(p.nv), poly(p) {
    if (!p.is_zero() && (!p.homogeneous() || p.degree() != 3))
      throw std::invalid_argument("CubicForm: homogeneous degree 3 expected");
  }
  static CubicForm zero(int nvars) { return CubicForm{FPoly(nvars)}; }

  bool is_zero() const { return poly.is_zero(); }
  FieldElement coeff(const Exp& e) const { return poly.coeff(e); }
  FieldElement tensor_entry(int i, int j, int k) const;

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.n == b.n && a.poly == b.poly;
  }
};

// Dense order-3 tensor of arbitrary shape (substitution-method intermediates).
struct GeneralTensor {
  std::array<int, 3> dims{0, 0, 0};
  std::vector<FieldElement> a;

  GeneralTensor() = default;
  GeneralTensor(int n1, int n2, int n3)
      : dims{n1, n2, n3}, a((size_t)n1 * n2 * n3) {}

  FieldElement& at(int i, int j, int k) {
    return a[((size_t)i * dims[1] + j) * dims[2] + k];
  }
  const FieldElement& at(int i, int j, int k) const {
    return a[((size_t)i * dims[1] + j) * dims[2] + k];
  }
  // mode-1 slice M_i as an n2 x n3 scalar matrix (T = sum_i e_i (x) M_i)
  ExactMatrix slice(int i) const;
};

enum class DecompKind { SymmetricPowers, RankOneTriples };

struct DecompTerm {
  FieldElement coef;
  // one vector for power terms, three for rank-one triples
  std::vector<std::vector<FieldElement>> vectors;
};

struct Decomposition {
  DecompKind kind = DecompKind::SymmetricPowers;
  int n = 0;
  std::string field = "Q";  // "Q", "Qsqrt:<d>", "R", "C"
  std::vector<DecompTerm> terms;

  int length() const { return (int)terms.size(); }
  void validate() const;
};

// the n x n^2 matrix with entry (i, (j,k)) = T_{ijk}
ExactMatrix flattening(const CubicForm& f);
int flattening_rank(const CubicForm& f);

// f(M y): substitute x_a <- sum_i M[a][i] y_i; M must be invertible
CubicForm apply_gl(const CubicForm& f, const ExactMatrix& M);

// For flattening rank r < n: an invertible M with apply_gl(f, M) supported on
// the first r variables, plus that form restricted to r variables.
struct Compression {
  CubicForm form;          // r variables
  ExactMatrix basis_change;  // n x n, columns r..n-1 span the vertex directions
};
Compression compress_cone(const CubicForm& f);

GeneralTensor embed_general(const CubicForm& f);
// inverse of embed_general; input must be cubical and fully symmetric
CubicForm tensor_to_form(const GeneralTensor& t);
bool is_symmetric(const GeneralTensor& t);

CubicForm evaluate_powers(const Decomposition& d);
GeneralTensor evaluate_triples(const Decomposition& d);
std::variant<CubicForm, GeneralTensor> evaluate_decomposition(
    const Decomposition& d);

FPoly linear_form(int n, const std::vector<FieldElement>& c);

// integer coefficients c_e uniform in [-B, B]
CubicForm random_cubic(int n, Rng& rng, long B = 10);
// sum of r cubes of random integer linear forms, coefficient 1 each
Decomposition random_cubes(int n, int r, Rng& rng, long B = 3);

// all degree-3 exponent vectors, in the map's (lex ascending) order
std::vector<Exp> cubic_exponents(int n);

}  // namespace cubicrank
