/**
 * @file lattice.hpp
 * @brief Frobenius levels, fractional lattice points and residue classes.
 *
 * Points of (1/q)Z^n are kept as integer numerator vectors over an explicit
 * positive denominator.  Comparisons are mathematical: vectors with different
 * denominators are rescaled to the lcm before comparing.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "dicart/numeric.hpp"

namespace dicart {

/// Prime power level q = p^e.  Primality of p is verified on construction.
struct FrobeniusLevel {
    std::int64_t p;
    int e;
    Int q;

    FrobeniusLevel(std::int64_t p_, int e_);
};

/// Element of (1/den)Z^n stored as numerators over a positive denominator.
struct FracVector {
    std::vector<Int> num;
    Int den;  // > 0

    FracVector(std::vector<Int> num_, Int den_);

    std::size_t dim() const { return num.size(); }
    Rat coord(std::size_t i) const { return Rat(num[i], den); }
    bool is_integral() const;

    /// Three-way mathematical lexicographic comparison.
    static int cmp(const FracVector& a, const FracVector& b);

    friend bool operator==(const FracVector& a, const FracVector& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const FracVector& a, const FracVector& b) { return cmp(a, b) != 0; }
    friend bool operator<(const FracVector& a, const FracVector& b) { return cmp(a, b) < 0; }
};

FracVector operator+(const FracVector& a, const FracVector& b);
FracVector operator-(const FracVector& a, const FracVector& b);

/// Class of a point in (1/q)Z^n / Z^n, held as q-scaled residues in [0, q).
struct ResidueClass {
    std::vector<Int> res;
    Int modulus;  // q

    static int cmp(const ResidueClass& a, const ResidueClass& b);

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const ResidueClass& a, const ResidueClass& b) { return cmp(a, b) != 0; }
    friend bool operator<(const ResidueClass& a, const ResidueClass& b) { return cmp(a, b) < 0; }
};

/// Componentwise numerator reduction mod v.den.
ResidueClass residue_class(const FracVector& v);

/// All q^n residue classes in lexicographic order.  Errors with cap_error if
/// q^n exceeds the cap.
std::vector<ResidueClass> enumerate_classes(const FrobeniusLevel& level, int n,
                                            std::int64_t cap = kDefaultEnumCap);

/// Divides an integer vector by the gcd of its entries; rejects the zero
/// vector.  The sign pattern is preserved.
std::vector<Int> primitivize(const std::vector<Int>& v);

}  // namespace dicart
