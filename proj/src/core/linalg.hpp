#pragma once

// Small exact linear algebra over arbitrary precision rationals: Gaussian
// elimination, inversion, nullspace vectors, a phase-one simplex for
// non-negative solvability, and a column Hermite form for integer lattices.
// Everything is deterministic; pivots are chosen by position, never by size.

#include "core/numeric.hpp"

#include <optional>
#include <vector>

namespace domcert {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

RatMat rat_identity(int n);
RatVec mat_vec(const RatMat& a, const RatVec& x);

int matrix_rank(RatMat a);

// Any exact solution of a*x = b, or nothing when the system is inconsistent.
// Free variables are set to zero.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

std::optional<RatMat> invert(RatMat a);  // nothing when singular

// A nonzero vector orthogonal to every row of a; throws when the rows span
// the full space.
RatVec nullspace_vector(RatMat a);

// Does x >= 0 with m*x = target exist?  Exact phase-one simplex with Bland's
// rule, so termination is guaranteed.
bool nonneg_combination_exists(const RatMat& m, const RatVec& target);

// Lower-triangular column form of a nonsingular square integer matrix whose
// columns generate the same lattice; diagonal entries are positive.
IntMat column_hermite(IntMat w);

}  // namespace domcert
