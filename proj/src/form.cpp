#include "cubicrank/form.hpp"

namespace cubicrank {

static Exp triple_exp(int n, int i, int j, int k) {
  Exp e(n, 0);
  e[i]++;
  e[j]++;
  e[k]++;
  return e;
}

FieldElement CubicForm::tensor_entry(int i, int j, int k) const {
  Exp e = triple_exp(n, i, j, k);
  FieldElement c = poly.coeff(e);
  if (c.is_zero()) return c;
  return c / FieldElement(Rat(multinomial(3, e)));
}

ExactMatrix GeneralTensor::slice(int i) const {
  ExactMatrix m(dims[1], dims[2]);
  for (int j = 0; j < dims[1]; j++)
    for (int k = 0; k < dims[2]; k++) m.at(j, k) = at(i, j, k);
  return m;
}

void Decomposition::validate() const {
  int want = kind == DecompKind::SymmetricPowers ? 1 : 3;
  for (auto& t : terms) {
    if (t.coef.is_zero())
      throw std::invalid_argument("decomposition: zero coefficient term");
    if ((int)t.vectors.size() != want)
      throw std::invalid_argument("decomposition: wrong vector count for kind");
    for (auto& v : t.vectors) {
      if ((int)v.size() != n)
        throw std::invalid_argument("decomposition: vector length != n");
      bool all_zero = true;
      for (auto& x : v) all_zero = all_zero && x.is_zero();
      if (all_zero) throw std::invalid_argument("decomposition: zero vector");
    }
  }
}

ExactMatrix flattening(const CubicForm& f) {
  int n = f.n;
  ExactMatrix m(n, n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) m.at(i, j * n + k) = f.tensor_entry(i, j, k);
  return m;
}

int flattening_rank(const CubicForm& f) { return rank_exact(flattening(f)); }

CubicForm apply_gl(const CubicForm& f, const ExactMatrix& M) {
  if (M.poly_mode || M.nr != f.n || M.nc != f.n)
    throw std::invalid_argument("apply_gl: n x n scalar matrix expected");
  if (det_exact(M).is_zero()) throw std::invalid_argument("apply_gl: singular M");
  std::vector<std::vector<FieldElement>> rows(f.n,
                                              std::vector<FieldElement>(f.n));
  for (int i = 0; i < f.n; i++)
    for (int j = 0; j < f.n; j++) rows[i][j] = M.at(i, j);
  return CubicForm{f.poly.subst_linear(rows)};
}

Compression compress_cone(const CubicForm& f) {
  int n = f.n;
  // directions v with sum_a v_a T_{ajk} = 0 for all (j,k); these are exactly
  // the directions along which every directional derivative of f vanishes
  ExactMatrix flat = flattening(f);
  ExactMatrix flat_t(flat.nc, flat.nr);
  for (int i = 0; i < flat.nr; i++)
    for (int j = 0; j < flat.nc; j++) flat_t.at(j, i) = flat.at(i, j);
  auto null_basis = nullspace_exact(flat_t);
  int r = n - (int)null_basis.size();
  if (r == n)
    throw std::invalid_argument("compress_cone: flattening has full rank");

  // complete the vertex directions to a basis with coordinate vectors,
  // scanning in index order so already-minimal supports stay untouched
  ExactMatrix M(n, n);
  std::vector<std::vector<FieldElement>> cols;
  for (int i = 0; i < n && (int)cols.size() < r; i++) {
    std::vector<FieldElement> e(n, FieldElement(0));
    e[i] = FieldElement(1);
    ExactMatrix probe(n, (int)cols.size() + (int)null_basis.size() + 1);
    int c = 0;
    for (auto& v : cols) {
      for (int a = 0; a < n; a++) probe.at(a, c) = v[a];
      c++;
    }
    for (auto& v : null_basis) {
      for (int a = 0; a < n; a++) probe.at(a, c) = v[a];
      c++;
    }
    for (int a = 0; a < n; a++) probe.at(a, c) = e[a];
    if (rank_exact(probe) == probe.nc) cols.push_back(e);
  }
  for (auto& v : null_basis) cols.push_back(v);
  for (int j = 0; j < n; j++)
    for (int a = 0; a < n; a++) M.at(a, j) = cols[j][a];

  CubicForm g = apply_gl(f, M);
  return Compression{CubicForm{g.poly.restrict_vars(r)}, M};
}

GeneralTensor embed_general(const CubicForm& f) {
  int n = f.n;
  GeneralTensor t(n, n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) t.at(i, j, k) = f.tensor_entry(i, j, k);
  return t;
}

bool is_symmetric(const GeneralTensor& t) {
  if (t.dims[0] != t.dims[1] || t.dims[1] != t.dims[2]) return false;
  int n = t.dims[0];
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++)
        if (t.at(i, j, k) != t.at(j, i, k) || t.at(i, j, k) != t.at(i, k, j))
          return false;
  return true;
}

CubicForm tensor_to_form(const GeneralTensor& t) {
  if (!is_symmetric(t))
    throw std::invalid_argument("tensor_to_form: symmetric tensor expected");
  int n = t.dims[0];
  FPoly p(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) {
        if (t.at(i, j, k).is_zero()) continue;
        p.add_term(triple_exp(n, i, j, k), t.at(i, j, k));
      }
  return CubicForm{p};
}

FPoly linear_form(int n, const std::vector<FieldElement>& c) {
  if ((int)c.size() != n) throw std::invalid_argument("linear_form arity");
  FPoly l(n);
  for (int i = 0; i < n; i++) {
    Exp e(n, 0);
    e[i] = 1;
    l.add_term(e, c[i]);
  }
  return l;
}

CubicForm evaluate_powers(const Decomposition& d) {
  if (d.kind != DecompKind::SymmetricPowers)
    throw std::invalid_argument("evaluate_powers: wrong decomposition kind");
  d.validate();
  FPoly acc(d.n);
  for (auto& t : d.terms)
    acc += t.coef * linear_form(d.n, t.vectors[0]).pow(3);
  return CubicForm{acc};
}

GeneralTensor evaluate_triples(const Decomposition& d) {
  if (d.kind != DecompKind::RankOneTriples)
    throw std::invalid_argument("evaluate_triples: wrong decomposition kind");
  d.validate();
  GeneralTensor t(d.n, d.n, d.n);
  for (auto& term : d.terms)
    for (int i = 0; i < d.n; i++)
      for (int j = 0; j < d.n; j++)
        for (int k = 0; k < d.n; k++)
          t.at(i, j, k) += term.coef * term.vectors[0][i] *
                           term.vectors[1][j] * term.vectors[2][k];
  return t;
}

std::variant<CubicForm, GeneralTensor> evaluate_decomposition(
    const Decomposition& d) {
  if (d.kind == DecompKind::SymmetricPowers) return evaluate_powers(d);
  return evaluate_triples(d);
}

std::vector<Exp> cubic_exponents(int n) {
  std::vector<Exp> out;
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++)
      for (int k = j; k < n; k++) out.push_back(triple_exp(n, i, j, k));
  std::sort(out.begin(), out.end());
  return out;
}

CubicForm random_cubic(int n, Rng& rng, long B) {
  FPoly p(n);
  for (auto& e : cubic_exponents(n))
    p.add_term(e, FieldElement(random_rat(rng, B)));
  return CubicForm{p};
}

Decomposition random_cubes(int n, int r, Rng& rng, long B) {
  Decomposition d;
  d.kind = DecompKind::SymmetricPowers;
  d.n = n;
  for (int t = 0; t < r; t++) {
    DecompTerm term;
    term.coef = FieldElement(1);
    std::vector<FieldElement> v(n);
    bool nonzero = false;
    do {
      for (int i = 0; i < n; i++) {
        v[i] = FieldElement(random_rat(rng, B));
        nonzero = nonzero || !v[i].is_zero();
      }
    } while (!nonzero);
    term.vectors.push_back(v);
    d.terms.push_back(term);
  }
  return d;
}

}  // namespace cubicrank
