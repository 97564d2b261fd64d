#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridroute {

// All continuous coordinates are exact rationals. cpp_rational keeps values
// in lowest terms with a positive denominator, which is exactly the invariant
// the geometry layer depends on; no floating point appears anywhere in a
// geometric predicate.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor division of cpp_int (truncates toward -inf, unlike operator/).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int rat_ceil(const Rat& r) {
    Int f = rat_floor(r);
    return (Rat(f) == r) ? f : f + 1;
}

inline int64_t to_i64(const Int& v) { return static_cast<int64_t>(v); }

// Smallest integer s with s*s >= v (v >= 0).
inline Int isqrt_ceil(const Int& v) {
    if (v <= 0) return 0;
    Int s = boost::multiprecision::sqrt(v);  // floor sqrt
    return (s * s == v) ? s : s + 1;
}

// Rational upper bound on sqrt(v) with three decimal digits of slack:
// ceil(sqrt(v * 10^6)) / 10^3 >= sqrt(v) for any nonnegative rational v.
inline Rat sqrt_upper_bound(const Rat& v) {
    if (v <= 0) return Rat(0);
    static const Int kScaleSq(1000000);
    static const Int kScale(1000);
    Rat scaled = v * Rat(kScaleSq);
    Int s = isqrt_ceil(rat_ceil(scaled));
    return Rat(s, kScale);
}

struct Pt {
    Rat x;
    Rat y;

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
};

inline Pt make_pt(int64_t x, int64_t y) { return Pt{Rat(x), Rat(y)}; }

// Cross product of (b-a) x (c-a); sign decides orientation exactly.
inline Rat cross(const Pt& a, const Pt& b, const Pt& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Parses an integer or exact decimal literal ("-3", "1.25") into a rational.
inline Rat parse_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    Int num = 0;
    Int den = 1;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + std::string(s));
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            num = num * 10 + (ch - '0');
            if (seen_dot) den *= 10;
            seen_digit = true;
        } else {
            throw std::invalid_argument("malformed decimal: " + std::string(s));
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal: " + std::string(s));
    if (neg) num = -num;
    return Rat(num, den);
}

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

}  // namespace gridroute
