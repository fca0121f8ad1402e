#pragma once

// Exact linear algebra over the rationals.

#include <altab/rational.hpp>

#include <vector>

namespace altab {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A v = b by Gaussian elimination with exact pivoting; throws
/// SingularSystem when A is singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

/// The probability vector pi with pi P = pi for a row-stochastic P whose
/// stationary law is unique.
std::vector<Rational> stationary_vector(const RationalMatrix& p);

}  // namespace altab
