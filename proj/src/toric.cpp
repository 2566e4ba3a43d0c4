#include "dicart/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dicart/linalg.hpp"

namespace dicart {

namespace {

bool int_lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

void for_each_subset(std::size_t m, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= m; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// Pointedness via a strictly positive functional: the dual cone
// {u : <ray, u> >= 0} is full-dimensional iff its extreme rays span, and the
// sum of a spanning generator set is an interior witness u with <ray, u> > 0.
bool is_pointed(const std::vector<std::vector<Int>>& rays, int n) {
    std::vector<std::vector<Int>> dual_rays;
    for_each_subset(rays.size(), static_cast<std::size_t>(n - 1),
                    [&](const std::vector<std::size_t>& idx) {
                        IntMatrix sub;
                        sub.reserve(idx.size());
                        for (auto i : idx) sub.push_back(rays[i]);
                        std::vector<Int> v = cross_kernel(sub, n);
                        if (std::all_of(v.begin(), v.end(), [](const Int& k) { return k == 0; }))
                            return;
                        for (int sign = 0; sign < 2; ++sign) {
                            bool in_dual = true;
                            for (const auto& ray : rays) {
                                Int s = 0;
                                for (int j = 0; j < n; ++j) s += ray[j] * v[j];
                                if (s < 0) {
                                    in_dual = false;
                                    break;
                                }
                            }
                            if (in_dual) dual_rays.push_back(v);
                            for (auto& k : v) k = -k;
                        }
                    });
    if (dual_rays.empty() || rank(dual_rays) < n) return false;
    std::vector<Int> u(n, 0);
    for (const auto& r : dual_rays)
        for (int j = 0; j < n; ++j) u[j] += r[j];
    for (const auto& ray : rays) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += ray[j] * u[j];
        if (s <= 0) return false;
    }
    return true;
}

}  // namespace

ToricDatum from_rays(const std::vector<std::vector<Int>>& raw) {
    if (raw.empty()) throw std::invalid_argument("from_rays: no rays given");
    const std::size_t n = raw[0].size();
    if (n < 1) throw std::invalid_argument("from_rays: dimension must be >= 1");

    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> rays;
    for (const auto& r : raw) {
        if (r.size() != n) throw std::invalid_argument("from_rays: ray length mismatch");
        auto p = primitivize(r);  // rejects the zero vector
        if (seen.insert(p).second) rays.push_back(std::move(p));
    }
    std::sort(rays.begin(), rays.end(), int_lex_less);

    IntMatrix m(rays.begin(), rays.end());
    if (rank(m) < static_cast<int>(n))
        throw std::invalid_argument("from_rays: rays do not span (cone is not full-dimensional)");
    if (!is_pointed(rays, static_cast<int>(n)))
        throw std::invalid_argument("from_rays: cone is not pointed");
    return ToricDatum{static_cast<int>(n), std::move(rays)};
}

HPolytope anticanonical(const ToricDatum& datum) {
    std::vector<HalfSpace> faces;
    faces.reserve(datum.rays.size());
    for (const auto& ray : datum.rays) faces.push_back({ray, Rat(-1), Relation::GreaterEq});
    return make_polytope(datum.dim, std::move(faces));
}

std::optional<std::vector<Rat>> gorenstein_shift(const ToricDatum& datum) {
    RatMatrix a;
    a.reserve(datum.rays.size());
    for (const auto& ray : datum.rays) a.emplace_back(ray.begin(), ray.end());
    std::vector<Rat> b(datum.rays.size(), Rat(-1));
    return solve_any(std::move(a), std::move(b));
}

bool is_smooth(const ToricDatum& datum) {
    if (datum.rays.size() != static_cast<std::size_t>(datum.dim)) return false;
    IntMatrix m(datum.rays.begin(), datum.rays.end());
    const Int d = det(m);
    return d == 1 || d == -1;
}

bool dual_leq(const FracVector& a, const FracVector& b, const ToricDatum& datum) {
    if (a.dim() != static_cast<std::size_t>(datum.dim) || b.dim() != a.dim())
        throw std::invalid_argument("dual_leq: dimension mismatch");
    if (a.den != b.den) throw std::invalid_argument("dual_leq: denominator mismatch");
    for (const auto& ray : datum.rays) {
        Int s = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) s += ray[i] * (b.num[i] - a.num[i]);
        if (s < 0) return false;
    }
    return true;
}

}  // namespace dicart
