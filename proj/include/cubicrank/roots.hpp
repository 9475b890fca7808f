#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubicrank/unipoly.hpp"

namespace cubicrank {

// Root finding did not reach the requested tolerance within the iteration
// budget.  Callers treat this differently from a wrong answer: the input may
// simply be too ill-conditioned for double precision.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All complex roots of p with multiplicities (sum of multiplicities equals
// deg p).  Exact Yun squarefree splitting first, then Aberth-Ehrlich on each
// squarefree factor, so clustered double roots do not degrade convergence.
std::vector<std::pair<Cx, int>> complex_roots(const UPoly& p,
                                              std::uint64_t seed = 1,
                                              double tol = 1e-13,
                                              int max_iter = 400);

// Aberth-Ehrlich on a squarefree complex polynomial (low-to-high coeffs).
std::vector<Cx> aberth_roots(const std::vector<Cx>& coeffs, std::uint64_t seed,
                             double tol, int max_iter);

}  // namespace cubicrank
