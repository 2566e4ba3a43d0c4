/**
 * @file oracle.hpp
 * @brief Symbolic cross-check for membership via maps on the torus algebra.
 *
 * A candidate splitting of the diagonal is a sum of pure tensors
 * pi_a (x) pi_a' with F_p coefficients.  Compatibility with the diagonal
 * ideal is equivalent to all residue-class sums agreeing in every total
 * degree, and such a map restricts on the diagonal to the common sum.  The
 * membership re-check in oracle_d2_contains enumerates the raw face
 * inequalities directly and never calls the polytope scanner, so agreement
 * with d2_contains is a genuine dual-route check.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dicart/toric.hpp"

namespace dicart {

/// F_p-linear combination of pure tensors of basis maps at one level.
/// Coefficients are reduced to [1, p); zero coefficients are dropped.
struct TensorMap {
    FrobeniusLevel level;
    std::map<std::pair<FracVector, FracVector>, std::int64_t> support;

    explicit TensorMap(FrobeniusLevel lvl) : level(std::move(lvl)) {}

    /// Adds c * pi_a (x) pi_b mod p.
    void add_term(const FracVector& a, const FracVector& b, std::int64_t c);
};

TensorMap add(const TensorMap& m1, const TensorMap& m2);
TensorMap scale(const TensorMap& m, std::int64_t c);

/// Compatibility with the diagonal ideal: for every total degree in the
/// support, the coefficient sums over each of the q^n residue classes of the
/// first tensor factor agree (classes without support sum to zero).
bool is_diagonal_compatible(const TensorMap& m, std::int64_t cap = kDefaultEnumCap);

/// Restriction to the diagonal, nonzero coefficients only.
struct DiagonalMap {
    FrobeniusLevel level;
    std::map<FracVector, std::int64_t> coeffs;
};

/// Requires is_diagonal_compatible(m); re-derives each degree's common class
/// sum (well-definedness is validated again during extraction).
DiagonalMap restrict_to_diagonal(const TensorMap& m, std::int64_t cap = kDefaultEnumCap);

/// Every support index pair lies interior to the anticanonical polytope,
/// i.e. the tensor factors are genuine basis maps for the cone.
bool extends_over_cone(const TensorMap& m, const ToricDatum& datum);

/// The canonical candidate for degree d from one representative per residue
/// class: sum over classes of pi_rep (x) pi_{d - rep}.  Requires a complete,
/// consistent system of representatives.
TensorMap build_witness_map(const FrobeniusLevel& level, const FracVector& d,
                            const std::map<ResidueClass, FracVector>& reps);

struct OracleReport {
    bool member;
    /// Ordered assertion transcript: (description, holds).
    std::vector<std::pair<std::string, bool>> transcript;
};

/// Independent membership decision for pi_d with a full assertion transcript.
/// Member: builds the witness map and checks compatibility, extension over
/// the cone, and exact restriction to pi_d.  NonMember: re-verifies the
/// uncovered class and records that every compatible degree-d map over the
/// cone restricts to zero.
OracleReport oracle_d2_report(const ToricDatum& datum, const FrobeniusLevel& level,
                              const FracVector& d, std::int64_t cap = kDefaultEnumCap);

bool oracle_d2_contains(const ToricDatum& datum, const FrobeniusLevel& level, const FracVector& d,
                        std::int64_t cap = kDefaultEnumCap);

}  // namespace dicart
