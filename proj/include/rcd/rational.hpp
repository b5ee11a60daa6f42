#pragma once

#include <numeric>
#include <string>

#include "rcd/errors.hpp"

namespace rcd {

// Exact non-negative rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
};

inline Rational make_rational(long long num, long long den) {
    if (den == 0) throw DesignError("rational with zero denominator");
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

// Fixed-point rendering with round-half-up, e.g. 11/12 -> "0.9167".
inline std::string decimal_string(const Rational& r, int places = 4) {
    long long scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    long long scaled = r.num * scale;
    long long q = scaled / r.den;
    long long rem = scaled % r.den;
    if (2 * rem >= r.den) ++q;
    std::string frac = std::to_string(q % scale);
    frac.insert(frac.begin(), places - frac.size(), '0');
    return std::to_string(q / scale) + "." + frac;
}

}  // namespace rcd
