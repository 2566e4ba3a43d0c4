/**
 * @file polytope.hpp
 * @brief Rational H-polytopes with per-face open/closed relations.
 *
 * All predicates and enumerations are exact.  Vertex and volume routines are
 * sized for ambient dimension <= 4; degenerate (lower-dimensional) bounded
 * polytopes have volume zero and empty ones enumerate to nothing.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "dicart/lattice.hpp"
#include "dicart/numeric.hpp"

namespace dicart {

enum class Relation { GreaterEq, Greater, LessEq, Less };

bool relation_is_strict(Relation r);
Relation relation_strict(Relation r);   // >= -> >, <= -> <
Relation relation_closed(Relation r);   // > -> >=, < -> <=
Relation relation_reflect(Relation r);  // >= <-> <=, > <-> <

struct HalfSpace {
    std::vector<Int> normal;  // nonzero integer vector
    Rat bound;
    Relation rel;
};

struct HPolytope {
    int dim;
    std::vector<HalfSpace> faces;
};

/// Validates normals (nonzero, correct length) and assembles the polytope.
HPolytope make_polytope(int dim, std::vector<HalfSpace> faces);

bool contains(const HPolytope& p, const std::vector<Rat>& x);
bool contains(const HPolytope& p, const FracVector& x);

/// Same faces with every relation made strict.
HPolytope interior(HPolytope p);

/// Same faces with every relation made closed.
HPolytope closure(HPolytope p);

/// Concatenation of the two face lists.
HPolytope intersect(const HPolytope& a, const HPolytope& b);

/// The set {d - x : x in p}.  Face <u,v> >= b maps to <u,v> <= <d,v> - b with
/// strictness preserved.
HPolytope reflect_translate(const FracVector& d, const HPolytope& p);

/// Exact boundedness via triviality of the recession cone.
bool is_bounded(const HPolytope& p);

/// All vertices of the closure (solutions of n-face subsystems satisfying
/// every face as a closed constraint), deduplicated, in lexicographic order.
/// Requires boundedness and dim <= 4.
std::vector<std::vector<Rat>> vertices(const HPolytope& p);

/// Euclidean volume of the closure: fan triangulation from the first vertex
/// over recursively triangulated facets, summing |det|/n! per simplex.
/// Requires boundedness and dim <= 4; lower-dimensional input gives 0.
Rat exact_volume(const HPolytope& p);

/// Points of (1/q)Z^n inside p (strictness respected), in lexicographic
/// order.  The scan grid is the vertex bounding box of the closure; errors
/// with cap_error when the grid exceeds the cap and rejects unbounded input.
std::vector<FracVector> frac_points(const HPolytope& p, const Int& q,
                                    std::int64_t cap = kDefaultEnumCap);

}  // namespace dicart
