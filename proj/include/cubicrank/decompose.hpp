#pragma once

#include <optional>

#include "cubicrank/form.hpp"
#include "cubicrank/io.hpp"

namespace cubicrank {

// a stage of the pentahedral pipeline found the input outside its generic
// hypotheses (positive-dimensional singular locus, repeated points, wrong
// plane count); `stage` names the failing stage
struct DegenerateError : std::runtime_error {
  std::string stage;
  DegenerateError(const std::string& st, const std::string& msg)
      : std::runtime_error(st + ": " + msg), stage(st) {}
};

// the five recovered planes plus the ten Hessian singular points and their
// incidence structure (each plane through exactly 6 points, each point on
// exactly 3 planes)
struct Pentahedron {
  std::vector<std::vector<Cx>> points;          // 10 projective points
  std::vector<std::vector<Cx>> planes;          // 5 plane normals (numeric)
  std::vector<std::vector<Rat>> planes_exact;   // nonempty iff reconstructed
  std::vector<std::vector<int>> incidence;      // per plane: 6 point indices
};

Json pentahedron_to_json(const Pentahedron& p);

struct SylvesterResult {
  Decomposition decomp;  // 5 symmetric-power terms
  Pentahedron pent;
  bool exact = false;    // rational planes + exactly verified multipliers
  double residual = 0.0;  // relative residual of the numeric fallback
};

// Pentahedral decomposition of a generic quaternary cubic: singular points
// of the Hessian quartic, planes through 6-point subsets, then the cube
// multipliers.  Exact whenever the planes reconstruct rationally and the
// multiplier solve verifies; numeric (with residual) otherwise.
SylvesterResult sylvester_decompose(const CubicForm& f, double tol = 1e-8,
                                    std::uint64_t seed = 1);

// three real cubes summing exactly to l^3 + conj(l)^3; exact when l has
// entries a + b*sqrt(d) with d < 0, numeric for approximate-complex entries
Decomposition realify_pair(const std::vector<FieldElement>& l);

struct VerifyResult {
  bool ok = false;
  bool exact = false;     // checked by exact arithmetic (residual then 0)
  double residual = 0.0;  // relative Frobenius residual
};

// exact equality check for exact decompositions, relative residual vs tol
// for numeric ones
VerifyResult verify_decomposition(const CubicForm& f, const Decomposition& d,
                                  double tol = 1e-8);

struct FitResult {
  int rank = 0;
  Decomposition decomp;  // numeric symmetric powers
  double residual = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

Json fit_to_json(const FitResult& r);

// Alternating least squares on the rank-r model, warm-started through ranks
// 1..r so the residual is non-increasing in r on a fixed seed schedule.
// Restarts run independently (OpenMP when parallel) and merge
// deterministically: best residual, ties to the lowest restart index.
// iters caps the sweeps per ALS run; border-rank evidence needs more sweeps
// than exact-rank fits because the minimizing factors diverge.
// Residuals are upper-bound evidence only, never certificates.
FitResult als_fit(const CubicForm& f, int rank, bool complex_field = true,
                  int restarts = 16, std::uint64_t seed = 1,
                  bool parallel = true, int iters = 600);

}  // namespace cubicrank
