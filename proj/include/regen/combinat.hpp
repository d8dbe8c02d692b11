#ifndef REGEN_COMBINAT_HPP
#define REGEN_COMBINAT_HPP

#include "regen/rational.hpp"

namespace regen {

/// C(a, b) with the zero-extension convention: 0 whenever b < 0 or b > a.
/// The convention keeps summation limits honest when weights run off the
/// hypergeometric support.
inline Int binomial(long long a, long long b) {
    if (a < 0) throw std::invalid_argument("binomial: negative a");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact at every step
    }
    return r;
}

/// Hypergeometric pmf as an exact rational:
/// C(successes, observed) * C(population-successes, draws-observed) / C(population, draws).
/// Zero outside the support.
inline Rational hypergeom_weight(long long population, long long successes,
                                 long long draws, long long observed) {
    if (draws < 0 || draws > population)
        throw std::invalid_argument("hypergeom_weight: need population >= draws >= 0");
    if (successes < 0 || successes > population)
        throw std::invalid_argument("hypergeom_weight: need 0 <= successes <= population");
    return ratio(binomial(successes, observed) * binomial(population - successes, draws - observed),
                 binomial(population, draws));
}

}  // namespace regen

#endif
