#include "dicart/cartier.hpp"

#include <algorithm>

namespace dicart {

namespace {

constexpr int kMaxBoxExpansions = 6;

// Lexicographically first class of (1/q)Z^n / Z^n absent from `present`,
// or nullopt when all q^n classes are covered.
std::optional<ResidueClass> first_missing_class(const std::map<ResidueClass, FracVector>& present,
                                                const Int& q, int n) {
    std::vector<Int> cur(n, 0);
    while (true) {
        ResidueClass c{cur, q};
        if (present.find(c) == present.end()) return c;
        int i = n - 1;
        while (i >= 0) {
            ++cur[i];
            if (cur[i] < q) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) return std::nullopt;
    }
}

HPolytope box_faces(int n, const Box& box) {
    std::vector<HalfSpace> faces;
    faces.reserve(2 * n);
    for (int j = 0; j < n; ++j) {
        std::vector<Int> e(n, 0);
        e[j] = 1;
        faces.push_back({e, box[j].first, Relation::GreaterEq});
        faces.push_back({e, box[j].second, Relation::LessEq});
    }
    return make_polytope(n, std::move(faces));
}

}  // namespace

PiMap make_pi_map(const ToricDatum& datum, const FrobeniusLevel& level, FracVector a) {
    if (a.dim() != static_cast<std::size_t>(datum.dim))
        throw std::invalid_argument("make_pi_map: dimension mismatch");
    if (a.den != level.q)
        throw std::invalid_argument("make_pi_map: denominator must equal q (no rescaling)");
    if (!contains(interior(anticanonical(datum)), a))
        throw std::invalid_argument("make_pi_map: index not interior to the anticanonical polytope");
    return PiMap{std::move(a), level};
}

std::vector<PiMap> payne_basis(const ToricDatum& datum, const FrobeniusLevel& level,
                               const Box& box, std::int64_t cap) {
    if (box.size() != static_cast<std::size_t>(datum.dim))
        throw std::invalid_argument("payne_basis: box dimension mismatch");
    const HPolytope region = intersect(interior(anticanonical(datum)), box_faces(datum.dim, box));
    std::vector<PiMap> out;
    for (auto& pt : frac_points(region, level.q, cap)) out.push_back(PiMap{std::move(pt), level});
    return out;
}

D2Certificate d2_contains(const ToricDatum& datum, const FrobeniusLevel& level,
                          const FracVector& d, std::int64_t cap) {
    const int n = datum.dim;
    if (d.dim() != static_cast<std::size_t>(n))
        throw std::invalid_argument("d2_contains: dimension mismatch");
    if (d.den != level.q)
        throw std::invalid_argument("d2_contains: denominator must equal q (no rescaling)");
    const HPolytope p = anticanonical(datum);
    if (!contains(interior(p), d))
        throw std::invalid_argument("d2_contains: d not interior to the anticanonical polytope");
    const Int classes = boost::multiprecision::pow(level.q, static_cast<unsigned>(n));
    if (classes > cap) throw cap_error("d2_contains: q^n exceeds enumeration cap");

    const HPolytope qd = interior(intersect(p, reflect_translate(d, p)));
    std::map<ResidueClass, FracVector> witnesses;
    for (auto& pt : frac_points(qd, level.q, cap)) {
        ResidueClass c = residue_class(pt);
        witnesses.emplace(std::move(c), std::move(pt));  // lex scan: first hit wins
    }

    D2Certificate cert;
    if (Int(witnesses.size()) == classes) {
        cert.verdict = Verdict::Member;
        cert.witnesses = std::move(witnesses);
    } else {
        cert.verdict = Verdict::NonMember;
        cert.missing_class = first_missing_class(witnesses, level.q, n);
    }
    return cert;
}

GeneratorResult d2_minimal_generators(const ToricDatum& datum, const FrobeniusLevel& level,
                                      const std::optional<Box>& box, std::int64_t cap) {
    const int n = datum.dim;

    std::map<FracVector, bool> member_cache;
    auto members_in = [&](const Box& b) {
        std::vector<FracVector> members;
        for (auto& pi : payne_basis(datum, level, b, cap)) {
            auto it = member_cache.find(pi.point);
            if (it == member_cache.end()) {
                const bool m =
                    d2_contains(datum, level, pi.point, cap).verdict == Verdict::Member;
                it = member_cache.emplace(pi.point, m).first;
            }
            if (it->second) members.push_back(pi.point);
        }
        return members;
    };
    auto minimal_of = [&](const std::vector<FracVector>& members) {
        std::vector<FracVector> out;
        for (const auto& m : members) {
            bool minimal = true;
            for (const auto& other : members) {
                if (other == m) continue;
                if (dual_leq(other, m, datum)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(m);
        }
        return out;  // members come lex sorted, so this stays sorted
    };

    if (box) {
        return GeneratorResult{minimal_of(members_in(*box)), *box, false, 0};
    }

    const auto shift = gorenstein_shift(datum);
    if (!shift)
        throw std::invalid_argument(
            "d2_minimal_generators: no Gorenstein shift; an explicit box is required");
    Box cur(n);
    for (int j = 0; j < n; ++j) cur[j] = {(*shift)[j], (*shift)[j] + 2};

    auto expand = [](Box b) {
        for (auto& [lo, hi] : b) {
            lo -= 1;
            hi += 1;
        }
        return b;
    };

    std::vector<FracVector> min_cur = minimal_of(members_in(cur));
    for (int round = 0; round <= kMaxBoxExpansions; ++round) {
        const Box next = expand(cur);
        std::vector<FracVector> min_next = minimal_of(members_in(next));
        if (min_next == min_cur) return GeneratorResult{std::move(min_cur), cur, true, round};
        cur = next;
        min_cur = std::move(min_next);
    }
    throw cap_error("d2_minimal_generators: generator box failed to stabilize");
}

bool is_diagonally_split(const ToricDatum& datum, const FrobeniusLevel& level, std::int64_t cap) {
    const FrobeniusLevel base(level.p, 1);
    const FracVector zero(std::vector<Int>(datum.dim, 0), base.q);
    return d2_contains(datum, base, zero, cap).verdict == Verdict::Member;
}

}  // namespace dicart
