#include "dicart/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dicart/linalg.hpp"

namespace dicart {

namespace {

constexpr int kMaxVertexDim = 4;

bool rat_lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool satisfies(const Rat& lhs, const Rat& bound, Relation rel) {
    switch (rel) {
        case Relation::GreaterEq: return lhs >= bound;
        case Relation::Greater: return lhs > bound;
        case Relation::LessEq: return lhs <= bound;
        case Relation::Less: return lhs < bound;
    }
    return false;
}

Rat dot(const std::vector<Int>& n, const std::vector<Rat>& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += Rat(n[i]) * x[i];
    return s;
}

bool on_hyperplane(const HalfSpace& h, const std::vector<Rat>& x) {
    return dot(h.normal, x) == h.bound;
}

int affine_rank(const std::vector<std::vector<Rat>>& pts) {
    if (pts.size() <= 1) return 0;
    RatMatrix diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> d(pts[0].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

// Enumerate size-k index subsets of [0, m).
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

// Fan triangulation of a d-dimensional face given by its vertex list (lex
// sorted).  Facets are recovered as maximal-rank intersections with the
// global hyperplane list; the fan apex is the lex-first vertex.
void triangulate(const std::vector<std::vector<Rat>>& verts, int d,
                 const std::vector<HalfSpace>& hyperplanes,
                 std::vector<std::vector<Rat>>& chain,
                 std::vector<std::vector<std::vector<Rat>>>& out) {
    if (verts.size() == static_cast<std::size_t>(d) + 1) {
        auto simplex = chain;
        simplex.insert(simplex.end(), verts.begin(), verts.end());
        out.push_back(std::move(simplex));
        return;
    }
    const auto& apex = verts.front();
    std::set<std::vector<std::vector<Rat>>> facets;
    for (const auto& h : hyperplanes) {
        if (on_hyperplane(h, apex)) continue;
        std::vector<std::vector<Rat>> w;
        for (const auto& v : verts)
            if (on_hyperplane(h, v)) w.push_back(v);
        if (w.size() < static_cast<std::size_t>(d)) continue;
        if (affine_rank(w) == d - 1) facets.insert(std::move(w));
    }
    chain.push_back(apex);
    for (const auto& w : facets) triangulate(w, d - 1, hyperplanes, chain, out);
    chain.pop_back();
}

}  // namespace

bool relation_is_strict(Relation r) { return r == Relation::Greater || r == Relation::Less; }

Relation relation_strict(Relation r) {
    switch (r) {
        case Relation::GreaterEq: return Relation::Greater;
        case Relation::LessEq: return Relation::Less;
        default: return r;
    }
}

Relation relation_closed(Relation r) {
    switch (r) {
        case Relation::Greater: return Relation::GreaterEq;
        case Relation::Less: return Relation::LessEq;
        default: return r;
    }
}

Relation relation_reflect(Relation r) {
    switch (r) {
        case Relation::GreaterEq: return Relation::LessEq;
        case Relation::Greater: return Relation::Less;
        case Relation::LessEq: return Relation::GreaterEq;
        case Relation::Less: return Relation::Greater;
    }
    return r;
}

HPolytope make_polytope(int dim, std::vector<HalfSpace> faces) {
    if (dim < 1) throw std::invalid_argument("make_polytope: dimension must be >= 1");
    for (const auto& f : faces) {
        if (f.normal.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("make_polytope: normal length mismatch");
        if (std::all_of(f.normal.begin(), f.normal.end(), [](const Int& k) { return k == 0; }))
            throw std::invalid_argument("make_polytope: zero normal");
    }
    return HPolytope{dim, std::move(faces)};
}

bool contains(const HPolytope& p, const std::vector<Rat>& x) {
    if (x.size() != static_cast<std::size_t>(p.dim))
        throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& f : p.faces)
        if (!satisfies(dot(f.normal, x), f.bound, f.rel)) return false;
    return true;
}

bool contains(const HPolytope& p, const FracVector& x) {
    std::vector<Rat> r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) r[i] = x.coord(i);
    return contains(p, r);
}

HPolytope interior(HPolytope p) {
    for (auto& f : p.faces) f.rel = relation_strict(f.rel);
    return p;
}

HPolytope closure(HPolytope p) {
    for (auto& f : p.faces) f.rel = relation_closed(f.rel);
    return p;
}

HPolytope intersect(const HPolytope& a, const HPolytope& b) {
    if (a.dim != b.dim) throw std::invalid_argument("intersect: dimension mismatch");
    HPolytope out = a;
    out.faces.insert(out.faces.end(), b.faces.begin(), b.faces.end());
    return out;
}

HPolytope reflect_translate(const FracVector& d, const HPolytope& p) {
    if (d.dim() != static_cast<std::size_t>(p.dim))
        throw std::invalid_argument("reflect_translate: dimension mismatch");
    HPolytope out = p;
    for (auto& f : out.faces) {
        Rat dv = 0;
        for (std::size_t i = 0; i < d.dim(); ++i) dv += Rat(f.normal[i]) * d.coord(i);
        f.bound = dv - f.bound;
        f.rel = relation_reflect(f.rel);
    }
    return out;
}

bool is_bounded(const HPolytope& p) {
    const int n = p.dim;
    // Recession directions satisfy <a, v> >= 0 with a = +normal for lower
    // bounds and a = -normal for upper bounds; bounded iff only v = 0 works.
    IntMatrix rows;
    rows.reserve(p.faces.size());
    for (const auto& f : p.faces) {
        std::vector<Int> r = f.normal;
        if (f.rel == Relation::LessEq || f.rel == Relation::Less)
            for (auto& k : r) k = -k;
        rows.push_back(std::move(r));
    }
    if (rank(rows) < n) return false;  // kernel directions recede
    // A pointed nonzero cone has an extreme ray on n-1 independent hyperplanes.
    bool unbounded = false;
    for_each_subset(rows.size(), static_cast<std::size_t>(n - 1),
                    [&](const std::vector<std::size_t>& idx) {
                        if (unbounded) return;
                        IntMatrix sub;
                        sub.reserve(idx.size());
                        for (auto i : idx) sub.push_back(rows[i]);
                        std::vector<Int> v = cross_kernel(sub, n);
                        if (std::all_of(v.begin(), v.end(), [](const Int& k) { return k == 0; }))
                            return;
                        for (int sign = 0; sign < 2; ++sign) {
                            bool ok = true;
                            for (const auto& row : rows) {
                                Int s = 0;
                                for (int j = 0; j < n; ++j) s += row[j] * v[j];
                                if (s < 0) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (ok) {
                                unbounded = true;
                                return;
                            }
                            for (auto& k : v) k = -k;
                        }
                    });
    return !unbounded;
}

std::vector<std::vector<Rat>> vertices(const HPolytope& p) {
    const int n = p.dim;
    if (n > kMaxVertexDim) throw std::invalid_argument("vertices: dimension cap is 4");
    if (!is_bounded(p)) throw std::invalid_argument("vertices: polytope is unbounded");
    const HPolytope cl = closure(p);
    std::set<std::vector<Rat>> found;
    if (p.faces.size() >= static_cast<std::size_t>(n)) {
        for_each_subset(p.faces.size(), static_cast<std::size_t>(n),
                        [&](const std::vector<std::size_t>& idx) {
                            RatMatrix a;
                            std::vector<Rat> b;
                            for (auto i : idx) {
                                std::vector<Rat> row(p.faces[i].normal.begin(),
                                                     p.faces[i].normal.end());
                                a.push_back(std::move(row));
                                b.push_back(p.faces[i].bound);
                            }
                            auto x = solve_square(std::move(a), std::move(b));
                            if (x && contains(cl, *x)) found.insert(std::move(*x));
                        });
    }
    std::vector<std::vector<Rat>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), rat_lex_less);
    return out;
}

Rat exact_volume(const HPolytope& p) {
    const int n = p.dim;
    const auto verts = vertices(p);  // enforces caps and boundedness
    if (verts.size() < static_cast<std::size_t>(n) + 1) return 0;
    if (affine_rank(verts) < n) return 0;

    const HPolytope cl = closure(p);
    std::vector<std::vector<std::vector<Rat>>> simplices;
    std::vector<std::vector<Rat>> chain;
    triangulate(verts, n, cl.faces, chain, simplices);

    Rat vol = 0;
    Rat nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& s : simplices) {
        RatMatrix m;
        m.reserve(n);
        for (int i = 1; i <= n; ++i) {
            std::vector<Rat> row(n);
            for (int j = 0; j < n; ++j) row[j] = s[i][j] - s[0][j];
            m.push_back(std::move(row));
        }
        Rat d = det(std::move(m));
        if (d < 0) d = -d;
        vol += d / nfact;
    }
    return vol;
}

std::vector<FracVector> frac_points(const HPolytope& p, const Int& q, std::int64_t cap) {
    if (q <= 0) throw std::invalid_argument("frac_points: denominator must be positive");
    if (!is_bounded(p)) throw std::invalid_argument("frac_points: polytope is unbounded");
    const auto verts = vertices(p);
    if (verts.empty()) return {};

    const int n = p.dim;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rat mn = verts[0][j], mx = verts[0][j];
        for (const auto& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = rat_ceil(mn * q);
        hi[j] = rat_floor(mx * q);
    }

    Int grid = 1;
    for (int j = 0; j < n; ++j) {
        if (hi[j] < lo[j]) return {};
        grid *= hi[j] - lo[j] + 1;
    }
    if (grid > cap) throw cap_error("frac_points: scan grid exceeds enumeration cap");

    // Face test on q-scaled numerators: den*<normal,k>  vs  num*q.
    struct ScaledFace {
        std::vector<Int> normal;
        Int lhs_scale, rhs;
        Relation rel;
    };
    std::vector<ScaledFace> faces;
    faces.reserve(p.faces.size());
    for (const auto& f : p.faces)
        faces.push_back({f.normal, denominator(f.bound), numerator(f.bound) * q, f.rel});

    std::vector<FracVector> out;
    std::vector<Int> k = lo;
    while (true) {
        bool inside = true;
        for (const auto& f : faces) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += f.normal[j] * k[j];
            s *= f.lhs_scale;
            bool ok = false;
            switch (f.rel) {
                case Relation::GreaterEq: ok = s >= f.rhs; break;
                case Relation::Greater: ok = s > f.rhs; break;
                case Relation::LessEq: ok = s <= f.rhs; break;
                case Relation::Less: ok = s < f.rhs; break;
            }
            if (!ok) {
                inside = false;
                break;
            }
        }
        if (inside) out.emplace_back(k, q);
        int j = n - 1;
        while (j >= 0) {
            ++k[j];
            if (k[j] <= hi[j]) break;
            k[j] = lo[j];
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

}  // namespace dicart
