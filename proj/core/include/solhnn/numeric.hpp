#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace solhnn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor division, b > 0
inline Int floordiv(const Int &a, const Int &b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int mod_floor(const Int &a, const Int &b) { return a - floordiv(a, b) * b; }

// returns the integer square root if n is a perfect square
inline std::optional<Int> exact_sqrt(const Int &n) {
    if (n < 0)
        return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n)
        return r;
    return std::nullopt;
}

inline Int abs_int(const Int &a) { return a < 0 ? Int(-a) : a; }

} // namespace solhnn
