/**
 * @file numeric.hpp
 * @brief Exact integer/rational scalar types and small parsing helpers.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration would exceed the configured resource cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default ceiling for lattice enumerations (grid points, residue classes).
inline constexpr std::int64_t kDefaultEnumCap = 10'000'000;

/// Floor division, b > 0.
Int floor_div(const Int& a, const Int& b);

/// Representative of a mod b in [0, b), b > 0.
Int mod_floor(const Int& a, const Int& b);

Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

/// Builds num/den exactly, accepting any nonzero den (sign is normalized
/// here; the underlying rational type rejects negative denominators).
Rat rat_frac(Int num, Int den);

/// Parses "n" or "n/d" with d > 0 after canonicalization.
Rat parse_rat(const std::string& s);

/// Renders "n" when integral, otherwise "n/d" in lowest terms.
std::string rat_str(const Rat& x);

}  // namespace dicart
