#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubicrank/matrix.hpp"
#include "cubicrank/modp.hpp"

namespace cubicrank {

enum class MonomialOrder { Grevlex, Lex };

struct GBLimits {
  long max_reductions = 100000;
  int max_degree = 30;
};

// computation exceeded its step/degree budget (CLI exit code 3)
struct ResourceCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// numeric stage failed in a way a different random chart may fix
struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ideal {
  int nv = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
  std::uint64_t prime = 0;  // 0 means Q, otherwise GF(prime)
  std::vector<QPoly> gens;
};

struct GroebnerBasis {
  int nv = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
  std::uint64_t prime = 0;
  std::vector<QPoly> polys;  // reduced and monic; GF(p) coefficients in [0,p)
};

GroebnerBasis buchberger(const Ideal& I, const GBLimits& limits = {});

// full normal form (head and tail) against a reduced basis
QPoly normal_form(const QPoly& f, const GroebnerBasis& G);

// (projective dimension, degree) from the Hilbert series of the leading
// monomial ideal; requires homogeneous basis polynomials.  Projective
// dimension -1 means the ideal cuts out the empty projective scheme.
std::pair<int, int> dim_degree(const GroebnerBasis& G);

// standard monomials under the leading ideal; throws when infinite
std::vector<Exp> quotient_basis(const GroebnerBasis& G);

// matrix of multiplication by ell on the quotient basis (rationals only)
QMat multiplication_matrix(const GroebnerBasis& G, const QPoly& ell,
                           const std::vector<Exp>& basis);

struct ProjPoint {
  std::vector<Cx> coords;  // length nv, scaled so the largest entry is 1
  int multiplicity = 1;
};

struct SolveResult {
  std::vector<ProjPoint> points;
  bool distinct = true;  // char poly squarefree (gcd with derivative trivial)
  int chart_attempts = 1;
};

struct SolveOptions {
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

// solve a homogeneous projective-dimension-0 system over Q by the
// multiplication-matrix eigenvalue method on an affine chart
SolveResult quotient_solve(const GroebnerBasis& G, const SolveOptions& opt = {},
                           const GBLimits& limits = {});

}  // namespace cubicrank
