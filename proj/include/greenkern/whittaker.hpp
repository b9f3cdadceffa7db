#pragma once

// Whittaker functions with mu = 1/2, via the Kummer/Tricomi pair at a = 1-kappa:
//     M_{kappa,1/2}(z) = e^{-z/2} z Phi(1-kappa, 2; z)
//     W_{kappa,1/2}(z) = e^{-z/2} z Psi(1-kappa, 2; z)
// The boundary values M(0) = 0 and M'(0) = 1 hold exactly.

#include <complex>

#include "greenkern/hypergeom.hpp"
#include "greenkern/numeric.hpp"

namespace greenkern {

inline Cplx whittaker_m(Cplx kappa, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(kappa, "whittaker_m");
    require_finite(z, "whittaker_m");
    if (std::abs(z) == 0.0) return Cplx(0.0, 0.0);
    return std::exp(-0.5 * z) * z * kummer_phi(1.0 - kappa, z, budget);
}

inline Cplx whittaker_m_prime(Cplx kappa, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(kappa, "whittaker_m_prime");
    require_finite(z, "whittaker_m_prime");
    if (std::abs(z) == 0.0) return Cplx(1.0, 0.0);
    const Cplx a = 1.0 - kappa;
    const Cplx phi = kummer_phi(a, z, budget);
    const Cplx dphi = kummer_phi_prime(a, z, budget);
    return std::exp(-0.5 * z) * ((1.0 - 0.5 * z) * phi + z * dphi);
}

inline Cplx whittaker_w(Cplx kappa, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(kappa, "whittaker_w");
    require_finite(z, "whittaker_w");
    return std::exp(-0.5 * z) * z * tricomi_psi(1.0 - kappa, z, budget);
}

inline Cplx whittaker_w_prime(Cplx kappa, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(kappa, "whittaker_w_prime");
    require_finite(z, "whittaker_w_prime");
    const Cplx a = 1.0 - kappa;
    const Cplx psi = tricomi_psi(a, z, budget);
    const Cplx dpsi = tricomi_psi_prime(a, z, budget);
    return std::exp(-0.5 * z) * ((1.0 - 0.5 * z) * psi + z * dpsi);
}

}  // namespace greenkern
