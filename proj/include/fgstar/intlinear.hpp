// Exact integer linear algebra at desk scale: determinants, unique integral
// solutions of nonsingular square systems, abelianization rank.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace fgstar {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

using IntMatrix = std::vector<std::vector<long long>>;
using IntVector = std::vector<long long>;

long long determinant(const IntMatrix& m);

// Unique rational solution of M*s = v, returned iff integral.
// Throws SingularMatrixError when det(M) = 0.
std::optional<IntVector> solve_integer_linear(const IntMatrix& m, const IntVector& v);

// Rank over Q.
int matrix_rank(IntMatrix m);

}  // namespace fgstar
