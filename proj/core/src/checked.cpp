#include "treepoly/checked.hpp"

namespace treepoly {

Int binomial(Int n, Int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 r = 1;
    for (Int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > INT64_MAX)
            throw OverflowError("binomial coefficient exceeds 64 bits");
    }
    return static_cast<Int>(r);
}

} // namespace treepoly
