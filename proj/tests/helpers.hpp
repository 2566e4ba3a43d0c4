// Shared fixtures for the test suite: the standard example data and short
// constructors for exact vectors.
#pragma once

#include <cstdint>
#include <vector>

#include "dicart/cartier.hpp"
#include "dicart/lattice.hpp"
#include "dicart/toric.hpp"

namespace th {

inline dicart::ToricDatum quadric() { return dicart::from_rays({{1, 0}, {-1, 2}}); }

inline dicart::ToricDatum affine_plane() { return dicart::from_rays({{1, 0}, {0, 1}}); }

inline dicart::ToricDatum affine_line() { return dicart::from_rays({{1}}); }

inline dicart::ToricDatum threefold() {
    return dicart::from_rays({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

inline dicart::FracVector fv(const std::vector<std::int64_t>& nums, std::int64_t den) {
    std::vector<dicart::Int> out(nums.begin(), nums.end());
    return dicart::FracVector(std::move(out), dicart::Int(den));
}

inline dicart::ResidueClass rc(const std::vector<std::int64_t>& res, std::int64_t q) {
    dicart::ResidueClass c;
    c.res.assign(res.begin(), res.end());
    c.modulus = q;
    return c;
}

inline std::vector<dicart::Rat> rv(const std::vector<std::int64_t>& xs) {
    return std::vector<dicart::Rat>(xs.begin(), xs.end());
}

inline dicart::Box box2(const dicart::Rat& xlo, const dicart::Rat& xhi, const dicart::Rat& ylo,
                        const dicart::Rat& yhi) {
    return dicart::Box{{xlo, xhi}, {ylo, yhi}};
}

}  // namespace th
