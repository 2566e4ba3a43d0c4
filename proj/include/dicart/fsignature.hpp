/**
 * @file fsignature.hpp
 * @brief F-signature data: splitting polytope, counts and exact volume.
 *
 * The half-open polytope {x : -1 < <x, v_rho> <= 0} indexes the splittings of
 * R at level e by its (1/q)Z^n points; its volume is the F-signature.  The
 * diagonal refinement counts which of those basis maps also witness
 * membership in the second diagonal Cartier algebra.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "dicart/cartier.hpp"
#include "dicart/toric.hpp"

namespace dicart {

/// {x : -1 < <x, v_rho> <= 0 for every ray}; bounded since the cone is
/// full-dimensional and pointed.
HPolytope sig_polytope(const ToricDatum& datum);

/// Points of (1/q)Z^n in the splitting polytope, lexicographic order.
std::vector<FracVector> splitting_points(const ToricDatum& datum, const FrobeniusLevel& level,
                                         std::int64_t cap = kDefaultEnumCap);

/// Exact volume of the splitting polytope (the F-signature; 1 iff smooth).
Rat fsig_volume(const ToricDatum& datum);

/// Number of splitting points whose basis map lies in the second diagonal
/// Cartier algebra at the given level.
std::int64_t d2_splitting_count(const ToricDatum& datum, const FrobeniusLevel& level,
                                std::int64_t cap = kDefaultEnumCap);

struct FsigRow {
    int e;
    Int q;
    std::int64_t split_count;
    std::int64_t d2_count;
    Rat split_ratio;  // split_count / q^n
    Rat d2_ratio;     // d2_count  / q^n
};

/// Rows e = 1..e_max of counts and exact normalized ratios.
std::vector<FsigRow> fsig_sequence(const ToricDatum& datum, std::int64_t p, int e_max,
                                   std::int64_t cap = kDefaultEnumCap);

}  // namespace dicart
