#include "dicart/numeric.hpp"

namespace dicart {

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;           // truncates toward zero
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

Int rat_floor(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

Rat rat_frac(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rat_frac: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

namespace {

Int parse_int_strict(const std::string& s) {
    std::size_t digits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 && (s[i] == '-' || s[i] == '+')) continue;
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer");
        ++digits;
    }
    if (digits == 0) throw std::invalid_argument("not an integer");
    return Int(s);
}

}  // namespace

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(parse_int_strict(s));
        Int n = parse_int_strict(s.substr(0, slash));
        Int d = parse_int_strict(s.substr(slash + 1));
        return rat_frac(std::move(n), std::move(d));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

std::string rat_str(const Rat& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) out += "/" + denominator(x).str();
    return out;
}

}  // namespace dicart
