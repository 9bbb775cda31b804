#pragma once

#include <vector>

#include "ga/rational.hpp"

namespace ga::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Rank by exact Gaussian elimination over the rationals.
int rank(Matrix m);

/// Basis of the right nullspace {x : m x = 0} of a matrix with `cols`
/// columns (rows are equations). Deterministic: computed from the reduced
/// row echelon form, one basis vector per free column in ascending column
/// order, with the free coordinate set to 1.
Matrix nullspace(Matrix m, std::size_t cols);

}  // namespace ga::linalg
