/**
 * @file toric.hpp
 * @brief Affine toric data: validated ray sets and derived structures.
 *
 * A datum is a full-dimensional pointed cone in N = Z^n given by its primitive
 * ray generators.  The dual side M carries the anticanonical polytope
 * {u : <u, v_rho> >= -1} and the divisibility order used for module
 * generation questions.
 */
#pragma once

#include <optional>
#include <vector>

#include "dicart/lattice.hpp"
#include "dicart/polytope.hpp"

namespace dicart {

struct ToricDatum {
    int dim;
    std::vector<std::vector<Int>> rays;  // primitive, deduplicated, lex sorted
};

/// Validates and normalizes raw ray generators: primitivizes, deduplicates,
/// and rejects rank-deficient or non-pointed configurations.
ToricDatum from_rays(const std::vector<std::vector<Int>>& raw);

/// The polytope {u : <u, v_rho> >= -1 for every ray}.
HPolytope anticanonical(const ToricDatum& datum);

/// The vector v with <v, v_rho> = -1 for every ray, when one exists
/// (the Q-Gorenstein case, where the anticanonical polytope is v + dual cone).
std::optional<std::vector<Rat>> gorenstein_shift(const ToricDatum& datum);

/// Exactly n rays forming a lattice basis (|det| = 1).
bool is_smooth(const ToricDatum& datum);

/// a <= b in the monomial-divisibility order: q(b - a) pairs nonnegatively
/// with every ray, i.e. lies in (dual cone) intersect Z^n.  Requires equal
/// denominators.
bool dual_leq(const FracVector& a, const FracVector& b, const ToricDatum& datum);

}  // namespace dicart
