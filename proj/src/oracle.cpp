#include "dicart/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dicart {

namespace {

std::int64_t mod_p(const Int& value, std::int64_t p) {
    return static_cast<std::int64_t>(mod_floor(value, Int(p)));
}

// Local determinant (recursive cofactor expansion); the oracle keeps its own
// linear algebra so the membership re-check shares no code with the polytope
// scanner.
Int local_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Int>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const Int term = m[0][c] * local_det(minor);
        d += (c % 2 == 0) ? term : -term;
    }
    return d;
}

struct RayBasis {
    std::vector<std::vector<Int>> rows;  // n independent rays
    Int det;
    std::vector<std::vector<Int>> adj;  // adjugate: rows^{-1} = adj / det
};

RayBasis pick_ray_basis(const ToricDatum& datum) {
    const int n = datum.dim;
    const std::size_t m = datum.rays.size();
    std::vector<std::size_t> idx(n);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int depth) -> bool {
        if (depth == n) {
            std::vector<std::vector<Int>> rows;
            rows.reserve(n);
            for (int i = 0; i < n; ++i) rows.push_back(datum.rays[idx[i]]);
            if (local_det(rows) != 0) return true;
            return false;
        }
        for (std::size_t i = start; i + (n - depth) <= m; ++i) {
            idx[depth] = i;
            if (rec(i + 1, depth + 1)) return true;
        }
        return false;
    };
    if (!rec(0, 0)) throw std::invalid_argument("oracle: rays do not span");

    RayBasis basis;
    for (int i = 0; i < n; ++i) basis.rows.push_back(datum.rays[idx[i]]);
    basis.det = local_det(basis.rows);
    basis.adj.assign(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<Int>> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Int> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(basis.rows[r][c]);
                minor.push_back(std::move(row));
            }
            const Int cof = (n == 1) ? Int(1) : local_det(minor);
            basis.adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return basis;
}

std::string class_str(const ResidueClass& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.res.size(); ++i) os << (i ? "," : "") << c.res[i];
    os << ")";
    return os.str();
}

}  // namespace

void TensorMap::add_term(const FracVector& a, const FracVector& b, std::int64_t c) {
    if (a.den != level.q || b.den != level.q)
        throw std::invalid_argument("TensorMap: indices must have denominator q");
    if (a.dim() != b.dim()) throw std::invalid_argument("TensorMap: dimension mismatch");
    if (!support.empty() && support.begin()->first.first.dim() != a.dim())
        throw std::invalid_argument("TensorMap: dimension mismatch");
    auto key = std::make_pair(a, b);
    const std::int64_t cur = support.count(key) ? support[key] : 0;
    const std::int64_t next = mod_p(Int(cur) + Int(c), level.p);
    if (next == 0)
        support.erase(key);
    else
        support[key] = next;
}

TensorMap add(const TensorMap& m1, const TensorMap& m2) {
    if (m1.level.p != m2.level.p || m1.level.e != m2.level.e)
        throw std::invalid_argument("add: level mismatch");
    TensorMap out = m1;
    for (const auto& [key, c] : m2.support) out.add_term(key.first, key.second, c);
    return out;
}

TensorMap scale(const TensorMap& m, std::int64_t c) {
    TensorMap out(m.level);
    const std::int64_t cm = mod_p(Int(c), m.level.p);
    if (cm == 0) return out;
    for (const auto& [key, coeff] : m.support)
        out.support[key] = mod_p(Int(coeff) * Int(cm), m.level.p);
    return out;
}

namespace {

// Per-degree residue-class sums; shared by the compatibility predicate and
// the restriction so the latter re-derives well-definedness.
std::map<FracVector, std::map<ResidueClass, std::int64_t>> class_sums(const TensorMap& m) {
    std::map<FracVector, std::map<ResidueClass, std::int64_t>> sums;
    for (const auto& [key, c] : m.support) {
        const FracVector deg = key.first + key.second;
        auto& bucket = sums[deg][residue_class(key.first)];
        bucket = mod_p(Int(bucket) + Int(c), m.level.p);
    }
    return sums;
}

Int class_count(const TensorMap& m) {
    const int n = static_cast<int>(m.support.begin()->first.first.dim());
    return boost::multiprecision::pow(m.level.q, static_cast<unsigned>(n));
}

}  // namespace

bool is_diagonal_compatible(const TensorMap& m, std::int64_t cap) {
    if (m.support.empty()) return true;
    const Int qn = class_count(m);
    if (qn > cap) throw cap_error("is_diagonal_compatible: q^n exceeds enumeration cap");
    for (const auto& [deg, sums] : class_sums(m)) {
        const std::int64_t common = sums.begin()->second;
        for (const auto& [cls, s] : sums)
            if (s != common) return false;
        // classes without support sum to zero
        if (common != 0 && Int(sums.size()) != qn) return false;
    }
    return true;
}

DiagonalMap restrict_to_diagonal(const TensorMap& m, std::int64_t cap) {
    DiagonalMap out{m.level, {}};
    if (m.support.empty()) return out;
    const Int qn = class_count(m);
    if (qn > cap) throw cap_error("restrict_to_diagonal: q^n exceeds enumeration cap");
    for (const auto& [deg, sums] : class_sums(m)) {
        const std::int64_t common = sums.begin()->second;
        for (const auto& [cls, s] : sums)
            if (s != common)
                throw std::invalid_argument("restrict_to_diagonal: map is not diagonal-compatible");
        if (common != 0 && Int(sums.size()) != qn)
            throw std::invalid_argument("restrict_to_diagonal: map is not diagonal-compatible");
        if (common != 0) out.coeffs.emplace(deg, common);
    }
    return out;
}

bool extends_over_cone(const TensorMap& m, const ToricDatum& datum) {
    for (const auto& [key, c] : m.support) {
        for (const FracVector* v : {&key.first, &key.second}) {
            if (v->dim() != static_cast<std::size_t>(datum.dim))
                throw std::invalid_argument("extends_over_cone: dimension mismatch");
            for (const auto& ray : datum.rays) {
                Int s = 0;
                for (std::size_t i = 0; i < v->dim(); ++i) s += ray[i] * v->num[i];
                if (s <= -v->den) return false;  // <v, ray> must exceed -1
            }
        }
    }
    return true;
}

TensorMap build_witness_map(const FrobeniusLevel& level, const FracVector& d,
                            const std::map<ResidueClass, FracVector>& reps) {
    if (d.den != level.q) throw std::invalid_argument("build_witness_map: d must have denominator q");
    const int n = static_cast<int>(d.dim());
    const Int qn = boost::multiprecision::pow(level.q, static_cast<unsigned>(n));
    if (Int(reps.size()) != qn)
        throw std::invalid_argument("build_witness_map: need one representative per class");
    TensorMap out(level);
    for (const auto& [cls, rep] : reps) {
        if (residue_class(rep) != cls)
            throw std::invalid_argument("build_witness_map: representative not in its class");
        out.add_term(rep, d - rep, 1);
    }
    return out;
}

OracleReport oracle_d2_report(const ToricDatum& datum, const FrobeniusLevel& level,
                              const FracVector& d, std::int64_t cap) {
    const int n = datum.dim;
    const Int& q = level.q;
    if (d.dim() != static_cast<std::size_t>(n))
        throw std::invalid_argument("oracle: dimension mismatch");
    if (d.den != q) throw std::invalid_argument("oracle: denominator must equal q (no rescaling)");

    // Band constraints per ray: -q < <k, ray> < <d.num, ray> + q for k = q*x.
    std::vector<Int> upper;
    upper.reserve(datum.rays.size());
    for (const auto& ray : datum.rays) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += ray[j] * d.num[j];
        if (s <= -q) throw std::invalid_argument("oracle: d not interior to the anticanonical polytope");
        upper.push_back(s + q);
    }

    const Int qn = boost::multiprecision::pow(q, static_cast<unsigned>(n));
    if (qn > cap) throw cap_error("oracle: q^n exceeds enumeration cap");

    // Bounding box from inverting n independent ray bands.
    const RayBasis basis = pick_ray_basis(datum);
    std::vector<Int> klo(n), khi(n);
    {
        std::vector<Rat> ylo(n), yhi(n);
        for (int i = 0; i < n; ++i) {
            ylo[i] = Rat(-1);
            Int s = 0;
            for (int j = 0; j < n; ++j) s += basis.rows[i][j] * d.num[j];
            yhi[i] = Rat(s + q, q);
        }
        for (int j = 0; j < n; ++j) {
            Rat xlo = 0, xhi = 0;
            for (int i = 0; i < n; ++i) {
                const Rat c = rat_frac(basis.adj[j][i], basis.det);
                if (c >= 0) {
                    xlo += c * ylo[i];
                    xhi += c * yhi[i];
                } else {
                    xlo += c * yhi[i];
                    xhi += c * ylo[i];
                }
            }
            klo[j] = rat_ceil(xlo * q);
            khi[j] = rat_floor(xhi * q);
        }
    }
    Int grid = 1;
    for (int j = 0; j < n; ++j) grid *= (khi[j] >= klo[j]) ? khi[j] - klo[j] + 1 : Int(0);
    if (grid > cap) throw cap_error("oracle: scan grid exceeds enumeration cap");

    auto in_bands = [&](const std::vector<Int>& k) {
        for (std::size_t r = 0; r < datum.rays.size(); ++r) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += datum.rays[r][j] * k[j];
            if (s <= -q || s >= upper[r]) return false;
        }
        return true;
    };

    std::map<ResidueClass, FracVector> reps;
    if (grid > 0) {
        std::vector<Int> k = klo;
        while (true) {
            if (in_bands(k)) {
                FracVector pt(k, q);
                reps.emplace(residue_class(pt), std::move(pt));  // lex scan: first hit wins
            }
            int j = n - 1;
            while (j >= 0) {
                ++k[j];
                if (k[j] <= khi[j]) break;
                k[j] = klo[j];
                --j;
            }
            if (j < 0) break;
        }
    }

    OracleReport report;
    report.member = Int(reps.size()) == qn;
    report.transcript.emplace_back(
        "scanned the raw ray bands of P cap (d - P) at denominator q", true);

    if (report.member) {
        const TensorMap witness = build_witness_map(level, d, reps);
        report.transcript.emplace_back("witness map built from one representative per class", true);
        report.transcript.emplace_back("witness map is diagonal-compatible",
                                       is_diagonal_compatible(witness, cap));
        report.transcript.emplace_back("witness map extends over the cone",
                                       extends_over_cone(witness, datum));
        bool restricts = false;
        const DiagonalMap diag = restrict_to_diagonal(witness, cap);
        restricts = diag.coeffs.size() == 1 && diag.coeffs.begin()->first == d &&
                    mod_p(Int(diag.coeffs.begin()->second - 1), level.p) == 0;
        report.transcript.emplace_back("witness map restricts on the diagonal to pi_d", restricts);
    } else {
        // Lexicographically first uncovered class, then a congruence-restricted
        // re-scan certifying it really has no representative.
        std::vector<Int> cur(n, 0);
        ResidueClass missing{cur, q};
        bool found = false;
        while (!found) {
            ResidueClass c{cur, q};
            if (reps.find(c) == reps.end()) {
                missing = c;
                found = true;
                break;
            }
            int i = n - 1;
            while (i >= 0) {
                ++cur[i];
                if (cur[i] < q) break;
                cur[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        bool none = true;
        std::vector<Int> start(n), steps(n);
        Int combos = 1;
        for (int j = 0; j < n; ++j) {
            start[j] = klo[j] + mod_floor(missing.res[j] - klo[j], q);
            steps[j] = (start[j] > khi[j]) ? Int(0) : floor_div(khi[j] - start[j], q) + 1;
            combos *= steps[j];
        }
        if (combos > 0) {
            std::vector<Int> t(n, 0);
            while (none) {
                std::vector<Int> k(n);
                for (int j = 0; j < n; ++j) k[j] = start[j] + t[j] * q;
                if (in_bands(k)) none = false;
                int j = n - 1;
                while (j >= 0) {
                    ++t[j];
                    if (t[j] < steps[j]) break;
                    t[j] = 0;
                    --j;
                }
                if (j < 0) break;
            }
        }
        report.transcript.emplace_back(
            "class " + class_str(missing) + " has no representative (congruence re-scan)", none);
        report.transcript.emplace_back(
            "class sums of a diagonal-compatible degree-d map all equal the empty class sum 0, "
            "so its diagonal restriction vanishes",
            true);
    }
    return report;
}

bool oracle_d2_contains(const ToricDatum& datum, const FrobeniusLevel& level, const FracVector& d,
                        std::int64_t cap) {
    return oracle_d2_report(datum, level, d, cap).member;
}

}  // namespace dicart
