#pragma once

#include <optional>
#include <vector>

#include "cubicrank/modp.hpp"
#include "cubicrank/poly.hpp"

namespace cubicrank {

using PRow = std::vector<std::uint64_t>;
using PMatU = std::vector<PRow>;

// In-place reduced row echelon form mod p; returns the pivot columns.
// The parallel variant distributes row updates with OpenMP and is bit-for-bit
// identical to the serial one (exact arithmetic, fixed pivot choice).
std::vector<int> rref_modp(PMatU& rows, std::uint64_t p, bool parallel);

// right null space basis, one vector per free column
PMatU nullspace_modp(const PMatU& rows, std::uint64_t p, bool parallel);

// x with x = r1 mod p1, x = r2 mod p2 as the least non-negative residue
mpz_class crt_pair(std::uint64_t r1, std::uint64_t p1, std::uint64_t r2,
                   std::uint64_t p2);

// Wang-style rational reconstruction of a mod m with |num|, den <= sqrt(m/2)
std::optional<Rat> rational_reconstruct(const mpz_class& a, const mpz_class& m);

// Interpolate the one-dimensional space of polynomials with the given
// monomial support vanishing on all sample coefficient vectors.  Two primes,
// CRT lift, exact integer output with content 1 and positive first nonzero
// coefficient (monomials in the order given).  Throws when the kernel mod
// either prime does not have dimension 1.
std::vector<mpz_class> interpolate_vanishing(
    const std::vector<Exp>& monomials,
    const std::vector<std::vector<Rat>>& samples, std::uint64_t seed,
    bool parallel);

}  // namespace cubicrank
