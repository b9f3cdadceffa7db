#pragma once

// Confluent hypergeometric functions with the second parameter fixed at 2:
// the regular Kummer function Phi(a,2;z) and the irregular Tricomi function
// Psi(a,2;z), together with their z-derivatives.  These are exactly the
// ingredients of the Whittaker pair with mu = 1/2.
//
// Branches:
//   Phi   Taylor series for |z| <= 20, large-z expansion beyond.
//   Psi   closed polynomial for nonpositive integer a;
//         logarithmic small-z expansion for |z| <= 20
//             Psi = 1/(z Gamma(a))
//                 + (1/Gamma(a-1)) sum_k (a)_k/((k+1)! k!) z^k
//                   (log z + psi(a+k) - psi(k+1) - psi(k+2));
//         Laplace integral for |z| > 20 (lifted by the three-term a-recurrence
//         when Re a is too small for the integral).

#include <cmath>
#include <complex>

#include "greenkern/errors.hpp"
#include "greenkern/gamma.hpp"
#include "greenkern/numeric.hpp"
#include "greenkern/quadrature.hpp"

namespace greenkern {

namespace detail {

inline constexpr double kHypSeriesRadius = 20.0;

struct ValueDeriv {
    Cplx f{0.0, 0.0};
    Cplx df{0.0, 0.0};
};

inline bool near_nonpositive_integer(const Cplx& a, long* m) {
    const double n = std::round(a.real());
    if (n > 0.5) return false;
    if (std::abs(a - Cplx(n, 0.0)) > 1e-9) return false;
    if (m) *m = static_cast<long>(-n);
    return true;
}

inline ValueDeriv kummer_series(const Cplx& a, const Cplx& z, const SeriesBudget& budget) {
    ValueDeriv r;
    Cplx term(1.0, 0.0);
    r.f = term;
    int calm = 0;
    for (int k = 0; k < budget.max_terms; ++k) {
        const Cplx next = term * (a + double(k)) * z / double((k + 2) * (k + 1));
        r.f += next;
        r.df += next * double(k + 1) / z;  // only called with z != 0
        term = next;
        if (std::abs(term) <= budget.rel_tol * std::abs(r.f) + budget.abs_tol) {
            if (++calm >= 2) return r;
        } else {
            calm = 0;
        }
    }
    throw BudgetExceeded("kummer_phi: series did not converge");
}

// Large-z expansion of Phi(a,2;z), dominant e^z branch plus the algebraic
// branch with the principal phase factor.
inline ValueDeriv kummer_asymptotic(const Cplx& a, const Cplx& z) {
    const Cplx rga = rgamma(a);
    const Cplx rg2a = rgamma(2.0 - a);
    auto truncated = [](const Cplx& p, const Cplx& q, const Cplx& w) {
        // sum_s (p)_s (q)_s / (s! w^s), truncated at the smallest term
        Cplx term(1.0, 0.0), sum(1.0, 0.0);
        double prev = 1.0;
        for (int s = 0; s < 40; ++s) {
            term *= (p + double(s)) * (q + double(s)) / (double(s + 1) * w);
            if (std::abs(term) >= prev) break;
            sum += term;
            prev = std::abs(term);
        }
        return sum;
    };
    const Cplx s1 = truncated(2.0 - a, 1.0 - a, z);
    const Cplx s2 = truncated(a, a - 1.0, -z);
    const Cplx phase = std::exp(Cplx(0.0, (z.imag() >= 0.0 ? 1.0 : -1.0) * kPi) * a);

    const Cplx ez = std::exp(z);
    const Cplx za2 = std::pow(z, a - 2.0);
    const Cplx zma = std::pow(z, -a);

    ValueDeriv r;
    r.f = phase * zma * rg2a * s2 + ez * za2 * rga * s1;
    // d/dz [e^z z^{a-2} S1] and d/dz [phase z^{-a} S2]; the sums' own
    // derivatives come from differentiating each z^{-s} term.
    Cplx s1p(0.0, 0.0), s2p(0.0, 0.0);
    {
        Cplx term(1.0, 0.0);
        double prev = 1.0;
        for (int s = 0; s < 40; ++s) {
            term *= (2.0 - a + double(s)) * (1.0 - a + double(s)) / (double(s + 1) * z);
            if (std::abs(term) >= prev) break;
            s1p += -double(s + 1) * term / z;
            prev = std::abs(term);
        }
    }
    {
        Cplx term(1.0, 0.0);
        double prev = 1.0;
        for (int s = 0; s < 40; ++s) {
            term *= (a + double(s)) * (a - 1.0 + double(s)) / (double(s + 1) * (-z));
            if (std::abs(term) >= prev) break;
            s2p += -double(s + 1) * term / z;
            prev = std::abs(term);
        }
    }
    r.df = phase * rg2a * (zma * s2p - a * std::pow(z, -a - 1.0) * s2) +
           ez * rga * (za2 * s1 + (a - 2.0) * std::pow(z, a - 3.0) * s1 + za2 * s1p);
    return r;
}

inline ValueDeriv kummer_phi_vd(const Cplx& a, const Cplx& z, const SeriesBudget& budget) {
    if (std::abs(z) == 0.0) return ValueDeriv{Cplx(1.0, 0.0), 0.5 * a};
    if (std::abs(z) <= kHypSeriesRadius) return kummer_series(a, z, budget);
    return kummer_asymptotic(a, z);
}

// Psi(-m,2;z) = (-1)^m sum_{k=0}^m C(m,k) (2+k)_{m-k} (-z)^k (polynomial case)
inline ValueDeriv tricomi_polynomial(long m, const Cplx& z) {
    ValueDeriv r;
    double binom = 1.0;
    for (long k = 0; k <= m; ++k) {
        double poch = 1.0;  // (2+k)_{m-k}
        for (long j = 0; j < m - k; ++j) poch *= double(2 + k + j);
        const Cplx zk = (k == 0) ? Cplx(1.0, 0.0) : std::pow(-z, double(k));
        const Cplx c = binom * poch * zk;
        r.f += c;
        if (k >= 1) r.df += c * double(k) / (-z) * (-1.0);
        binom *= double(m - k) / double(k + 1);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    r.f *= sign;
    r.df *= sign;
    return r;
}

inline ValueDeriv tricomi_log_expansion(const Cplx& a, const Cplx& z,
                                        const SeriesBudget& budget) {
    const Cplx rg_a = rgamma(a);
    const Cplx rg_am1 = rgamma(a - 1.0);
    ValueDeriv r;
    r.f = rg_a / z;
    r.df = -rg_a / (z * z);
    if (std::abs(rg_am1) == 0.0) return r;  // a = 1: Psi(1,2;z) = 1/z exactly

    const Cplx L = std::log(z);
    Cplx P(1.0, 0.0);                                        // (a)_k / ((k+1)! k!)
    Cplx d = digamma(a) + 2.0 * kEulerGamma - 1.0;           // psi(a)-psi(1)-psi(2)
    Cplx zk(1.0, 0.0);
    Cplx sum(0.0, 0.0), dsum(0.0, 0.0);
    int calm = 0;
    for (int k = 0; k < budget.max_terms; ++k) {
        const Cplx term = P * zk * (L + d);
        sum += term;
        dsum += P * zk / z * (double(k) * (L + d) + 1.0);
        const double scale = std::abs(P * zk) * (std::abs(L + d) + 1.0);
        if (scale <= budget.rel_tol * (std::abs(sum) + std::abs(rg_a / z)) + budget.abs_tol) {
            if (++calm >= 2) break;
        } else {
            calm = 0;
        }
        if (k == budget.max_terms - 1)
            throw BudgetExceeded("tricomi_psi: log expansion did not converge");
        P *= (a + double(k)) / double((k + 2) * (k + 1));
        d += 1.0 / (a + double(k)) - 1.0 / double(k + 1) - 1.0 / double(k + 2);
        zk *= z;
    }
    r.f += rg_am1 * sum;
    r.df += rg_am1 * dsum;
    return r;
}

// Laplace representation, Re a > 0, Re z > 0:
//   Psi(a,2;z)  = (1/Gamma(a)) Int_0^inf e^{-zt} t^{a-1} (1+t)^{1-a} dt
//   Psi'(a,2;z) = -(1/Gamma(a)) Int_0^inf e^{-zt} t^{a}   (1+t)^{1-a} dt
inline Cplx tricomi_laplace_integral(const Cplx& a, const Cplx& z, double extra_power) {
    const double re_a = a.real() + extra_power;
    const int p = std::max(2, static_cast<int>(std::ceil(1.05 / re_a)));
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-18;
    cfg.split_point = std::max(0.25, 2.0 * p / z.real());
    auto g = [&](double u) -> Cplx {
        if (u <= 0.0) return Cplx(0.0, 0.0);
        const double t = std::pow(u, p);
        // p u^{p(a+extra)-1} e^{-zt} (1+t)^{1-a}; the u-exponent has
        // Re >= 0.05 by the choice of p, so the head is integrable as is.
        const Cplx expo = -z * t + (double(p) * (a + extra_power) - 1.0) * std::log(u) +
                          (1.0 - a) * std::log1p(t);
        return double(p) * std::exp(expo);
    };
    const QuadratureResult r = integrate_halfline(g, cfg);
    return r.value;
}

inline ValueDeriv tricomi_large_z(const Cplx& a, const Cplx& z);

inline ValueDeriv tricomi_psi_vd(const Cplx& a, const Cplx& z, const SeriesBudget& budget) {
    long m = 0;
    if (near_nonpositive_integer(a, &m)) return tricomi_polynomial(m, z);
    if (std::abs(z) <= kHypSeriesRadius) return tricomi_log_expansion(a, z, budget);
    return tricomi_large_z(a, z);
}

inline ValueDeriv tricomi_large_z(const Cplx& a, const Cplx& z) {
    if (!(z.real() > 0.0))
        throw DomainError("tricomi_psi: |z| > 20 with Re z <= 0 is outside the supported domain");
    if (a.real() > 0.05) {
        const Cplx rga = rgamma(a);
        ValueDeriv r;
        r.f = rga * tricomi_laplace_integral(a, z, 0.0);
        r.df = -rga * tricomi_laplace_integral(a, z, 1.0);
        return r;
    }
    // lift with U(b-1) = (2b - 2 + z) U(b) - b(b-1) U(b+1), walking b downward
    const long steps = static_cast<long>(std::ceil(0.05 - a.real())) + 1;
    Cplx b = a + double(steps + 1);
    ValueDeriv hi = tricomi_psi_vd(b, z, SeriesBudget{});
    ValueDeriv lo = tricomi_psi_vd(b - 1.0, z, SeriesBudget{});
    for (long i = 0; i < steps; ++i) {
        b -= 1.0;
        ValueDeriv next;
        next.f = (2.0 * b - 2.0 + z) * lo.f - b * (b - 1.0) * hi.f;
        next.df = lo.f + (2.0 * b - 2.0 + z) * lo.df - b * (b - 1.0) * hi.df;
        hi = lo;
        lo = next;
    }
    return lo;
}

}  // namespace detail

inline Cplx kummer_phi(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    budget.validate();
    require_finite(a, "kummer_phi");
    require_finite(z, "kummer_phi");
    return detail::kummer_phi_vd(a, z, budget).f;
}

inline Cplx kummer_phi_prime(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(a, "kummer_phi_prime");
    require_finite(z, "kummer_phi_prime");
    return detail::kummer_phi_vd(a, z, budget).df;
}

inline Cplx tricomi_psi(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    budget.validate();
    require_finite(a, "tricomi_psi");
    require_finite(z, "tricomi_psi");
    if (std::abs(z) == 0.0) throw DomainError("tricomi_psi: z = 0 is a branch point");
    return detail::tricomi_psi_vd(a, z, budget).f;
}

inline Cplx tricomi_psi_prime(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(a, "tricomi_psi_prime");
    require_finite(z, "tricomi_psi_prime");
    if (std::abs(z) == 0.0) throw DomainError("tricomi_psi_prime: z = 0 is a branch point");
    return detail::tricomi_psi_vd(a, z, budget).df;
}

}  // namespace greenkern
