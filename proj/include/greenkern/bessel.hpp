#pragma once

// Modified Bessel functions K_0, K_1, K_{1/2} for Re z > 0.
//
// Small |z|: the standard ascending series paired with log(z/2) terms.
// Larger |z|: the real-axis integral representation
//     K_nu(z) = exp(-z) * Int_0^inf exp(-z(cosh t - 1)) cosh(nu t) dt,
// which is free of the cancellation that limits the series and of the
// truncation floor of the large-z asymptotic series.

#include <cmath>
#include <complex>

#include "greenkern/errors.hpp"
#include "greenkern/numeric.hpp"
#include "greenkern/quadrature.hpp"

namespace greenkern {

enum class BesselOrder { zero, one, half };

namespace detail {

inline constexpr double kBesselSeriesEdge = 5.0;

inline Cplx bessel_i0_series(const Cplx& q /* = z^2/4 */) {
    Cplx term(1.0, 0.0), sum(1.0, 0.0);
    for (int k = 1; k < 64; ++k) {
        term *= q / double(k * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

inline Cplx bessel_k0_series(const Cplx& z) {
    const Cplx q = 0.25 * z * z;
    const Cplx lg = -(std::log(0.5 * z) + kEulerGamma);
    Cplx term(1.0, 0.0), sum(0.0, 0.0);
    double hk = 0.0;
    for (int k = 1; k < 64; ++k) {
        term *= q / double(k * k);
        hk += 1.0 / k;
        sum += term * hk;
        if (std::abs(term) * (hk + 1.0) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return lg * bessel_i0_series(q) + sum;
}

inline Cplx bessel_k1_series(const Cplx& z) {
    const Cplx q = 0.25 * z * z;
    // I_1(z) = (z/2) sum q^k / (k!(k+1)!)
    Cplx term(1.0, 0.0), i1(1.0, 0.0);
    for (int k = 1; k < 64; ++k) {
        term *= q / double(k * (k + 1));
        i1 += term;
        if (std::abs(term) < 1e-18 * std::abs(i1)) break;
    }
    i1 *= 0.5 * z;
    // sum_k (psi(k+1)+psi(k+2)) q^k / (k!(k+1)!)
    Cplx t2(1.0, 0.0), s2(0.0, 0.0);
    double psis = -2.0 * kEulerGamma + 1.0;  // psi(1)+psi(2)
    s2 = t2 * psis;
    for (int k = 1; k < 64; ++k) {
        t2 *= q / double(k * (k + 1));
        psis += 1.0 / k + 1.0 / (k + 1.0);
        s2 += t2 * psis;
        if (std::abs(t2) * (std::abs(psis) + 1.0) < 1e-18 * (std::abs(s2) + 1.0)) break;
    }
    return 1.0 / z + std::log(0.5 * z) * i1 - 0.25 * z * s2;
}

inline Cplx bessel_k_integral(int nu, const Cplx& z) {
    // exp(+z)-scaled integrand; truncation at cosh(T)-1 = 45/Re z
    const double T = std::acosh(1.0 + 45.0 / z.real()) + 0.5;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-15;
    auto g = [&](double t) -> Cplx {
        const double c = std::cosh(t);
        return std::exp(-z * (c - 1.0)) * (nu == 0 ? 1.0 : c);
    };
    const QuadratureResult r = integrate_interval(g, 0.0, T, cfg);
    return std::exp(-z) * r.value;
}

}  // namespace detail

inline Cplx bessel_k_half(Cplx z) {
    require_finite(z, "bessel_k_half");
    if (!(z.real() > 0.0)) throw DomainError("bessel_k_half: requires Re z > 0");
    return std::sqrt(0.5 * kPi / z) * std::exp(-z);
}

inline Cplx bessel_k0(Cplx z) {
    require_finite(z, "bessel_k0");
    if (!(z.real() > 0.0)) throw DomainError("bessel_k0: requires Re z > 0");
    if (std::abs(z) <= detail::kBesselSeriesEdge) return detail::bessel_k0_series(z);
    return detail::bessel_k_integral(0, z);
}

inline Cplx bessel_k1(Cplx z) {
    require_finite(z, "bessel_k1");
    if (!(z.real() > 0.0)) throw DomainError("bessel_k1: requires Re z > 0");
    if (std::abs(z) <= detail::kBesselSeriesEdge) return detail::bessel_k1_series(z);
    return detail::bessel_k_integral(1, z);
}

inline Cplx bessel_k(BesselOrder order, Cplx z) {
    switch (order) {
        case BesselOrder::zero: return bessel_k0(z);
        case BesselOrder::one: return bessel_k1(z);
        case BesselOrder::half: return bessel_k_half(z);
    }
    throw DomainError("bessel_k: unknown order");
}

}  // namespace greenkern
