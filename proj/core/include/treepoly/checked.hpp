#pragma once

#include <cstdint>
#include <string>

#include "treepoly/error.hpp"

namespace treepoly {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

// C(n, k), zero whenever k < 0, n < 0 or k > n.
Int binomial(Int n, Int k);

inline Int sign_of_parity(Int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace treepoly
