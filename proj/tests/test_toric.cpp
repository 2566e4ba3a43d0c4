#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dicart/fsignature.hpp"
#include "dicart/polytope.hpp"
#include "dicart/toric.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace dicart;
using th::fv;

TEST_CASE("ray validation normalizes, deduplicates and sorts") {
    const ToricDatum q = th::quadric();
    CHECK(q.dim == 2);
    REQUIRE(q.rays.size() == 2);
    CHECK(q.rays[0] == std::vector<Int>{-1, 2});
    CHECK(q.rays[1] == std::vector<Int>{1, 0});

    // Scaled duplicates collapse after primitivization.
    const ToricDatum q2 = from_rays({{2, 0}, {-1, 2}, {1, 0}, {-3, 6}});
    CHECK(q2.rays == q.rays);

    CHECK(th::threefold().rays.size() == 4);
    CHECK(th::affine_line().rays == std::vector<std::vector<Int>>{{1}});
}

TEST_CASE("ray validation rejects degenerate input") {
    CHECK_THROWS_AS(from_rays({}), std::invalid_argument);
    CHECK_THROWS_AS(from_rays({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_rays({{1, 0}, {-1, 0}}), std::invalid_argument);          // a line
    CHECK_THROWS_AS(from_rays({{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);     // rank 2 in R^3
    CHECK_THROWS_AS(from_rays({{1, 0}, {-1, 2}, {0, -1}}), std::invalid_argument); // half-plane
    CHECK_THROWS_AS(from_rays({{1, 0}, {1, 2, 3}}), std::invalid_argument);        // ragged
}

TEST_CASE("anticanonical polytope has one closed face per ray at bound -1") {
    const HPolytope p = anticanonical(th::quadric());
    REQUIRE(p.faces.size() == 2);
    for (const auto& f : p.faces) {
        CHECK(f.bound == Rat(-1));
        CHECK(f.rel == Relation::GreaterEq);
    }
    CHECK(contains(p, th::rv({0, 0})));
    CHECK(contains(p, th::rv({-1, -1})));
    CHECK(!contains(p, {Rat(-2), Rat(0)}));

    CHECK(anticanonical(th::affine_plane()).faces.size() == 2);
    CHECK(anticanonical(th::threefold()).faces.size() == 4);
}

TEST_CASE("the shift vector pairs to -1 with every ray when it exists") {
    const auto qs = gorenstein_shift(th::quadric());
    REQUIRE(qs.has_value());
    CHECK(*qs == th::rv({-1, -1}));

    const auto ts = gorenstein_shift(th::threefold());
    REQUIRE(ts.has_value());
    CHECK(*ts == th::rv({-1, -1, 0}));

    const auto ps = gorenstein_shift(th::affine_plane());
    REQUIRE(ps.has_value());
    CHECK(*ps == th::rv({-1, -1}));

    // (1,0) and (1,1) force v = (-1, 0), which pairs to -2 with (2,1).
    CHECK(!gorenstein_shift(from_rays({{1, 0}, {2, 1}, {1, 1}})).has_value());
}

TEST_CASE("the anticanonical polytope is the shifted dual cone") {
    for (const ToricDatum& datum : {th::quadric(), th::threefold()}) {
        const HPolytope p = anticanonical(datum);
        const auto shift = gorenstein_shift(datum);
        REQUIRE(shift.has_value());
        const int n = datum.dim;
        std::vector<Int> idx(static_cast<std::size_t>(n), -10);
        while (true) {
            std::vector<Rat> x(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) x[i] = Rat(idx[i], 5);
            bool in_shifted_dual = true;
            for (const auto& ray : datum.rays) {
                Rat s = 0;
                for (std::size_t i = 0; i < x.size(); ++i)
                    s += (x[i] - (*shift)[i]) * Rat(ray[i]);
                if (s < 0) in_shifted_dual = false;
            }
            CHECK(contains(p, x) == in_shifted_dual);
            std::size_t i = idx.size();
            while (i > 0 && idx[i - 1] == 10) idx[--i] = -10;
            if (i == 0) break;
            ++idx[i - 1];
        }
    }
}

TEST_CASE("smoothness is the unimodular-basis test") {
    CHECK(is_smooth(th::affine_plane()));
    CHECK(is_smooth(th::affine_line()));
    CHECK(!is_smooth(th::quadric()));    // determinant 2
    CHECK(!is_smooth(th::threefold()));  // four rays in dimension 3
}

TEST_CASE("smooth data have splitting volume exactly 1") {
    CHECK(fsig_volume(th::affine_plane()) == Rat(1));
    CHECK(fsig_volume(from_rays({{1, 0}, {1, 1}})) == Rat(1));  // sheared plane
    CHECK(fsig_volume(th::quadric()) != Rat(1));
}

TEST_CASE("divisibility order examples") {
    const ToricDatum q = th::quadric();
    CHECK(dual_leq(fv({0, 0}, 5), fv({0, 0}, 5), q));
    CHECK(dual_leq(fv({0, 0}, 5), fv({5, 5}, 5), q));    // w = (5,5)
    CHECK(!dual_leq(fv({0, 0}, 5), fv({-1, 0}, 5), q));  // w = (-1,0) pairs to -1
    CHECK_THROWS_AS(dual_leq(fv({0, 0}, 5), fv({0, 0}, 3), q), std::invalid_argument);
}

TEST_CASE("divisibility order is a partial order on a point grid") {
    const ToricDatum datum = th::quadric();
    const HPolytope p = anticanonical(datum);
    const FracVector zero = fv({0, 0}, 1);
    const auto pts = frac_points(interior(intersect(p, reflect_translate(zero, p))), 3);
    REQUIRE(pts.size() > 10);

    for (const auto& a : pts) CHECK(dual_leq(a, a, datum));
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (dual_leq(a, b, datum) && dual_leq(b, a, datum)) CHECK(a == b);
            for (const auto& c : pts)
                if (dual_leq(a, b, datum) && dual_leq(b, c, datum))
                    CHECK(dual_leq(a, c, datum));
        }
}
