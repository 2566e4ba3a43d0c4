#include "dicart/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

namespace dicart {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FrobeniusLevel::FrobeniusLevel(std::int64_t p_, int e_) : p(p_), e(e_) {
    if (!is_prime(p)) throw std::invalid_argument("FrobeniusLevel: p must be prime");
    if (e < 1) throw std::invalid_argument("FrobeniusLevel: e must be >= 1");
    q = boost::multiprecision::pow(Int(p), static_cast<unsigned>(e));
}

FracVector::FracVector(std::vector<Int> num_, Int den_) : num(std::move(num_)), den(std::move(den_)) {
    if (den <= 0) throw std::invalid_argument("FracVector: denominator must be positive");
}

bool FracVector::is_integral() const {
    for (const Int& k : num)
        if (k % den != 0) return false;
    return true;
}

int FracVector::cmp(const FracVector& a, const FracVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("FracVector: dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        // a_i/da vs b_i/db with positive denominators
        const Int lhs = a.num[i] * b.den;
        const Int rhs = b.num[i] * a.den;
        if (lhs != rhs) return lhs < rhs ? -1 : 1;
    }
    return 0;
}

FracVector operator+(const FracVector& a, const FracVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("FracVector: dimension mismatch");
    const Int l = boost::multiprecision::lcm(a.den, b.den);
    const Int fa = l / a.den, fb = l / b.den;
    std::vector<Int> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.num[i] * fa + b.num[i] * fb;
    return FracVector(std::move(out), l);
}

FracVector operator-(const FracVector& a, const FracVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("FracVector: dimension mismatch");
    const Int l = boost::multiprecision::lcm(a.den, b.den);
    const Int fa = l / a.den, fb = l / b.den;
    std::vector<Int> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.num[i] * fa - b.num[i] * fb;
    return FracVector(std::move(out), l);
}

int ResidueClass::cmp(const ResidueClass& a, const ResidueClass& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("ResidueClass: modulus mismatch");
    if (a.res.size() != b.res.size()) throw std::invalid_argument("ResidueClass: dimension mismatch");
    for (std::size_t i = 0; i < a.res.size(); ++i)
        if (a.res[i] != b.res[i]) return a.res[i] < b.res[i] ? -1 : 1;
    return 0;
}

ResidueClass residue_class(const FracVector& v) {
    ResidueClass c;
    c.modulus = v.den;
    c.res.reserve(v.dim());
    for (const Int& k : v.num) c.res.push_back(mod_floor(k, v.den));
    return c;
}

std::vector<ResidueClass> enumerate_classes(const FrobeniusLevel& level, int n, std::int64_t cap) {
    if (n < 1) throw std::invalid_argument("enumerate_classes: dimension must be >= 1");
    const Int total = boost::multiprecision::pow(level.q, static_cast<unsigned>(n));
    if (total > cap) throw cap_error("enumerate_classes: q^n exceeds enumeration cap");

    std::vector<ResidueClass> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<Int> cur(n, 0);
    while (true) {
        out.push_back(ResidueClass{cur, level.q});
        int i = n - 1;
        while (i >= 0) {
            ++cur[i];
            if (cur[i] < level.q) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<Int> primitivize(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& k : v) g = boost::multiprecision::gcd(g, k);
    if (g == 0) throw std::invalid_argument("primitivize: zero vector");
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

}  // namespace dicart
