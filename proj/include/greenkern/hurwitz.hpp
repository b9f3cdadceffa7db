#pragma once

// Hurwitz zeta Z(s,v) at s = 1/2 for Re v > 0 by Euler-Maclaurin summation:
// shift v by N so that Re(v+N) >= 10, sum the first N terms directly and
// close with the integral, midpoint and six Bernoulli correction terms.
// The first omitted correction is below 1e-15 relative at the shift edge.

#include <cmath>
#include <complex>

#include "greenkern/errors.hpp"
#include "greenkern/numeric.hpp"

namespace greenkern {

inline Cplx hurwitz_zeta_half(Cplx v) {
    require_finite(v, "hurwitz_zeta_half");
    if (!(v.real() > 0.0)) throw DomainError("hurwitz_zeta_half: requires Re v > 0");

    constexpr double s = 0.5;
    const int shift = std::max(0, static_cast<int>(std::ceil(10.0 - v.real())));
    Cplx sum(0.0, 0.0);
    for (int k = 0; k < shift; ++k) sum += 1.0 / std::sqrt(v + double(k));

    const Cplx w = v + double(shift);
    const Cplx rsw = 1.0 / std::sqrt(w);  // w^{-1/2}
    Cplx z = sum - 2.0 * std::sqrt(w) + 0.5 * rsw;

    // Bernoulli corrections: B_{2j}/(2j)! * (s)_{2j-1} * w^{-s-2j+1}
    Cplx wpow = rsw / w;        // w^{-3/2}
    double poch = s;            // (s)_1
    double fact = 2.0;          // (2j)!
    for (int j = 1; j <= 6; ++j) {
        z += kBernoulli2k[j - 1] / fact * poch * wpow;
        wpow /= w * w;
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return z;
}

}  // namespace greenkern
