#pragma once

#include <array>
#include <string>

#include "cubicrank/form.hpp"
#include "cubicrank/groebner.hpp"

namespace cubicrank {

// data directory: $CUBICRANK_DATA_DIR, else <source>/data
std::string data_dir();

// Cayley hyperdeterminant of the 2x2x2 symmetric tensor of a binary cubic
// (b^2 - 4ac from det(uA + vB) = a u^2 + b uv + c v^2).  Nonnegative exactly
// when the real rank is at most two.
Rat hyperdet_222(const CubicForm& f);

// matrix of second partials (polynomial mode) and its determinant
ExactMatrix hessian(const CubicForm& f);
QPoly hessian_det(const CubicForm& f);

struct SingularReport {
  bool singular = false;
  int dim = -1;     // projective dimension of the singular locus (-1 = empty)
  int degree = 0;   // degree of the singular scheme (0 when empty)
  std::vector<ProjPoint> points;  // filled when dim == 0
};

// singular locus of {f = 0} over Q via the Jacobian ideal
SingularReport is_singular(const CubicForm& f, const GBLimits& limits = {});

struct GenericityReport {
  bool hessian_vanishes = false;
  int dim = -2;
  int degree = 0;
  bool distinct = false;  // meaningful only when dim == 0
  std::array<std::uint64_t, 2> primes{0, 0};

  // pentahedral genericity for quaternary cubics: ten reduced points
  bool generic() const {
    return !hessian_vanishes && dim == 0 && degree == 10 && distinct;
  }
};

// Singular locus of the Hessian hypersurface, computed modulo two random
// primes that must agree; point distinctness via squarefreeness of the
// characteristic polynomial of a separating linear form.
GenericityReport hessian_genericity(const CubicForm& f, std::uint64_t seed = 1,
                                    int prime_bits = 31);

// polynomial in the coefficients of a cubic form, with exact setup metadata
struct InvariantData {
  std::string name;
  int nv = 0;      // number of coefficient variables (10 ternary, 20 quaternary)
  int degree = 0;  // degree in the coefficients
  QPoly poly;
};

void save_invariant(const InvariantData& inv, const std::string& path);
InvariantData load_invariant(const std::string& path);  // checksum verified

// degree-4 generator of the ideal of the rank-3 locus of ternary cubics,
// interpolated from scratch (two primes + rational reconstruction)
InvariantData build_aronhold(std::uint64_t seed = 20260823, int samples = 800,
                             bool parallel = true);
InvariantData load_aronhold();  // from data_dir(), with vanishing self-test
Rat aronhold_eval(const InvariantData& inv, const CubicForm& ternary);

// all degree-5 monomials in the 20 cubic coefficients with torus weight
// (2, 4, 4, 5); the quintic equation lives in this subspace
std::vector<Exp> quintic_weight_support();

// quintic vanishing on the rank-4 locus of quaternary cubics, interpolated
// in the weight subspace
InvariantData build_salmon_quintic(std::uint64_t seed = 20260823,
                                   bool parallel = true);
InvariantData load_salmon();  // from data_dir(), weight-checked

enum class CoeffConvention {
  Polynomial,  // variables are the monomial coefficients c_e of the form
  Tensor,      // variables are symmetric tensor entries, c_e = binom * T_e
};
Rat salmon_eval(const InvariantData& inv, const CubicForm& quaternary,
                CoeffConvention conv = CoeffConvention::Polynomial);

struct MembershipReport {
  bool member = true;   // no orbit translate with nonzero quintic was found
  int trials = 0;
  int witness_trial = -1;  // first translate refuting membership, or -1
};

// evaluate the quintic on seeded GL orbit translates of f; a nonzero value
// certifies that f lies outside the rank-4 locus closure
MembershipReport sigma4_membership(const CubicForm& f,
                                   const InvariantData& quintic,
                                   std::uint64_t seed = 1, int trials = 24,
                                   bool parallel = true);

// [adj(A) B, adj(A) C] for a seeded invertible recombination A of the slices
// of a 3x3x3 tensor; vanishing for all pairs characterizes border rank <= 3
ExactMatrix strassen_commutator(const GeneralTensor& t, std::uint64_t seed = 1);
bool strassen_brank3_test(const GeneralTensor& t, std::uint64_t seed = 1);

}  // namespace cubicrank
