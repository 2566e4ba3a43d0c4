/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over the rationals, sized for dim <= 4.
 */
#pragma once

#include <optional>
#include <vector>

#include "dicart/numeric.hpp"

namespace dicart {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

int rank(RatMatrix m);
int rank(const IntMatrix& m);

Rat det(RatMatrix m);
Int det(const IntMatrix& m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rat>> solve_square(RatMatrix a, std::vector<Rat> b);

/// Any solution of a (possibly overdetermined) consistent system, free
/// variables pinned to zero; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_any(RatMatrix a, std::vector<Rat> b);

/// Generalized cross product: for (n-1) rows in Z^n returns an integer vector
/// orthogonal to all of them (zero vector iff the rows have rank < n-1).
/// For n == 1 (no rows) returns (1).
std::vector<Int> cross_kernel(const IntMatrix& rows, int n);

}  // namespace dicart
