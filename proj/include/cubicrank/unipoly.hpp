#pragma once
#include <vector>

#include "cubicrank/field.hpp"
#include "cubicrank/poly.hpp"

namespace cubicrank {

// Dense univariate polynomials over Q, low-to-high coefficient order.
// Small helper layer for the root finder and the multiplication-matrix
// solver (gcd, square-free decomposition).
using UPoly = std::vector<Rat>;

void utrim(UPoly& p);
int udeg(const UPoly& p);  // -1 for the zero polynomial
UPoly uderiv(const UPoly& p);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly uneg(const UPoly& a);
// remainder of a mod b (b non-zero)
UPoly urem(UPoly a, const UPoly& b);
// quotient of exact division
UPoly uquo(UPoly a, const UPoly& b);
UPoly umonic(UPoly a);
UPoly ugcd(UPoly a, UPoly b);
Rat ueval(const UPoly& p, const Rat& x);

// Yun's algorithm: returns factors f1, f2, ... with p ~ prod fi^i,
// each fi square-free (monic)
std::vector<UPoly> squarefree_decomposition(UPoly p);

UPoly to_upoly(const QPoly& p);      // univariate SparsePoly -> dense
QPoly from_upoly(const UPoly& p);

}  // namespace cubicrank
