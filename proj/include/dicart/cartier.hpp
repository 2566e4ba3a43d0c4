/**
 * @file cartier.hpp
 * @brief Second diagonal Cartier algebra membership and generators.
 *
 * The basis of Hom(F^e_* R, R) is indexed by interior fractional lattice
 * points of the anticanonical polytope P.  The map at index d belongs to the
 * second diagonal Cartier algebra at level e exactly when the open polytope
 * Q_d = int(P cap (d - P)) contains a representative of every residue class
 * of (1/q)Z^n / Z^n.  Certificates carry the lexicographically first witness
 * per class, or the lexicographically first uncovered class.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dicart/toric.hpp"

namespace dicart {

/// Basis map of Hom(F^e_* R, R): x^u -> x^{a+u} when integral, else 0.
struct PiMap {
    FracVector point;
    FrobeniusLevel level;
};

/// Validates that a lies in (1/q)Z^n (denominator exactly q) and in the
/// interior of the anticanonical polytope.
PiMap make_pi_map(const ToricDatum& datum, const FrobeniusLevel& level, FracVector a);

/// Coordinatewise closed rational box, one [lo, hi] pair per coordinate.
using Box = std::vector<std::pair<Rat, Rat>>;

/// Basis maps whose index lies in the box, in lexicographic order.
std::vector<PiMap> payne_basis(const ToricDatum& datum, const FrobeniusLevel& level,
                               const Box& box, std::int64_t cap = kDefaultEnumCap);

enum class Verdict { Member, NonMember };

struct D2Certificate {
    Verdict verdict;
    /// Member: lexicographically first witness point per residue class.
    std::map<ResidueClass, FracVector> witnesses;
    /// NonMember: lexicographically first class with no representative.
    std::optional<ResidueClass> missing_class;
};

/// Membership test for pi_d.  Rejects d with denominator != q or d outside
/// the open anticanonical polytope.
D2Certificate d2_contains(const ToricDatum& datum, const FrobeniusLevel& level,
                          const FracVector& d, std::int64_t cap = kDefaultEnumCap);

struct GeneratorResult {
    std::vector<FracVector> generators;  // lex sorted
    Box box;                             // box actually scanned
    bool box_auto;                       // true when derived from the shift
    int expansions;                      // stabilization rounds taken
};

/// Minimal members under dual_leq among the members indexed in the box.
/// Without an explicit box the scan uses shift + [0,2]^n, grown one unit in
/// every direction until the minimal set is stable under one further
/// expansion (requires a Gorenstein shift to exist).
GeneratorResult d2_minimal_generators(const ToricDatum& datum, const FrobeniusLevel& level,
                                      const std::optional<Box>& box = std::nullopt,
                                      std::int64_t cap = kDefaultEnumCap);

/// Diagonal F-splitting: membership of pi_0 at level e = 1 (equivalent to
/// membership at any level, so e = 1 is authoritative).
bool is_diagonally_split(const ToricDatum& datum, const FrobeniusLevel& level,
                         std::int64_t cap = kDefaultEnumCap);

}  // namespace dicart
