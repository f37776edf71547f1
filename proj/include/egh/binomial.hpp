#ifndef EGH_BINOMIAL_HPP
#define EGH_BINOMIAL_HPP

#include <cstdint>

#include "egh/errors.hpp"

namespace egh {

// Binomial coefficient C(a, b) as a 64-bit integer; returns 0 when a < b or
// b < 0. Throws input_error on overflow instead of wrapping.
inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        // r * (a - b + i) stays exact: divide by i only after multiplying,
        // using __int128 to guard the intermediate.
        __int128 t = static_cast<__int128>(r) * (a - b + i);
        t /= i;
        if (t > INT64_MAX) throw input_error("binomial coefficient overflow");
        r = static_cast<std::int64_t>(t);
    }
    return r;
}

// Number of degree-d monomials in n variables, C(n+d-1, d).
inline std::int64_t monomial_count(int n, int d) {
    if (d < 0) return 0;
    return binomial(n + d - 1, d);
}

}  // namespace egh

#endif
