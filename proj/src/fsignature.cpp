#include "dicart/fsignature.hpp"

namespace dicart {

HPolytope sig_polytope(const ToricDatum& datum) {
    std::vector<HalfSpace> faces;
    faces.reserve(2 * datum.rays.size());
    for (const auto& ray : datum.rays) {
        faces.push_back({ray, Rat(-1), Relation::Greater});
        faces.push_back({ray, Rat(0), Relation::LessEq});
    }
    return make_polytope(datum.dim, std::move(faces));
}

std::vector<FracVector> splitting_points(const ToricDatum& datum, const FrobeniusLevel& level,
                                         std::int64_t cap) {
    return frac_points(sig_polytope(datum), level.q, cap);
}

Rat fsig_volume(const ToricDatum& datum) { return exact_volume(sig_polytope(datum)); }

std::int64_t d2_splitting_count(const ToricDatum& datum, const FrobeniusLevel& level,
                                std::int64_t cap) {
    std::int64_t count = 0;
    for (const auto& pt : splitting_points(datum, level, cap)) {
        // splitting points satisfy <pt, ray> > -1, so they are valid queries
        if (d2_contains(datum, level, pt, cap).verdict == Verdict::Member) ++count;
    }
    return count;
}

std::vector<FsigRow> fsig_sequence(const ToricDatum& datum, std::int64_t p, int e_max,
                                   std::int64_t cap) {
    if (e_max < 1) throw std::invalid_argument("fsig_sequence: e_max must be >= 1");
    std::vector<FsigRow> rows;
    rows.reserve(e_max);
    for (int e = 1; e <= e_max; ++e) {
        const FrobeniusLevel level(p, e);
        const Int qn = boost::multiprecision::pow(level.q, static_cast<unsigned>(datum.dim));
        FsigRow row;
        row.e = e;
        row.q = level.q;
        row.split_count = static_cast<std::int64_t>(splitting_points(datum, level, cap).size());
        row.d2_count = d2_splitting_count(datum, level, cap);
        row.split_ratio = Rat(row.split_count, qn);
        row.d2_ratio = Rat(row.d2_count, qn);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dicart
