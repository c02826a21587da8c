#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace plumbing {

// All invariants in this library are exact rationals whose denominators divide
// 4|det M|; every computation therefore runs over arbitrary-precision integers
// and rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecI = std::vector<Int>;
using VecR = std::vector<Rat>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor division, correct for negative operands. b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rat& r) { return floor_div(numerator(r), denominator(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(numerator(r), denominator(r)); }

// Euclidean residue in [0, m) for m > 0.
inline Int mod_euclid(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Largest x >= 0 with x*x <= v; v must be nonnegative.
inline Int isqrt(const Int& v) { return boost::multiprecision::sqrt(v); }

// floor(sqrt(r)) for a nonnegative rational r.
inline Int floor_sqrt_rat(const Rat& r) {
    const Int p = numerator(r), q = denominator(r);
    return floor_div(isqrt(p * q), q);
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (Int i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

// Serialized as "p" when integral, "p/q" otherwise; parsing accepts both.
std::string rat_to_string(const Rat& r);
std::optional<Rat> rat_from_string(const std::string& text);

inline std::string int_to_string(const Int& v) { return v.str(); }

}  // namespace plumbing
