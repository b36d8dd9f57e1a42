#include "treepoly/composition_ops.hpp"

#include "treepoly/error.hpp"

namespace treepoly {

Composition concat(const Composition& a, const Composition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    std::vector<int> parts = a.parts();
    parts.back() += b[0];
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

Composition odot_power(const Composition& beta, int i)
{
    if (i < 1)
        throw DomainError("odot_power needs i >= 1");
    Composition r = beta;
    for (int j = 1; j < i; ++j)
        r = near_concat(r, beta);
    return r;
}

Composition compose(const Composition& alpha, const Composition& beta)
{
    Composition r;
    for (int a : alpha.parts())
        r = concat(r, odot_power(beta, a));
    return r;
}

Composition pad_ones(const Composition& alpha)
{
    return near_concat(near_concat(Composition{1}, alpha), Composition{1});
}

} // namespace treepoly
