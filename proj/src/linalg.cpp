#include "dicart/linalg.hpp"

namespace dicart {

namespace {

// In-place row echelon; returns pivot column per pivot row.
std::vector<std::size_t> echelon(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(echelon(m).size()); }

int rank(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return rank(std::move(r));
}

Rat det(RatMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Int det(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    const Rat d = det(std::move(r));
    return numerator(d);  // integer matrix, so denominator is 1
}

std::optional<std::vector<Rat>> solve_square(RatMatrix a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    const auto pivots = echelon(a);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (pivots[r] >= n) return std::nullopt;  // pivot in the augmented column
    std::vector<Rat> x(n);
    for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n] / a[r][pivots[r]];
    return x;
}

std::optional<std::vector<Rat>> solve_any(RatMatrix a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_any: size mismatch");
    if (rows == 0) return std::vector<Rat>{};
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = echelon(a);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == cols) return std::nullopt;  // 0 = nonzero row
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols] / a[r][pivots[r]];
    return x;
}

std::vector<Int> cross_kernel(const IntMatrix& rows, int n) {
    if (n < 1) throw std::invalid_argument("cross_kernel: dimension must be >= 1");
    if (rows.size() + 1 != static_cast<std::size_t>(n))
        throw std::invalid_argument("cross_kernel: need n-1 rows");
    if (n == 1) return {Int(1)};
    std::vector<Int> v(n);
    for (int j = 0; j < n; ++j) {
        IntMatrix minor;
        minor.reserve(n - 1);
        for (const auto& row : rows) {
            std::vector<Int> r;
            r.reserve(n - 1);
            for (int c = 0; c < n; ++c)
                if (c != j) r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        const Int m = det(minor);
        v[j] = (j % 2 == 0) ? m : -m;
    }
    return v;
}

}  // namespace dicart
