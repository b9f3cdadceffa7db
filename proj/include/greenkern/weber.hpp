#pragma once

// Parabolic cylinder function U(a,z), the solution of u'' = (z^2/4 + a) u
// recessive as z -> +inf:  U(a,z) ~ exp(-z^2/4) z^{-a-1/2}.
//
// Evaluation:
//   |z| <= 5        even/odd power series with the initial values
//                   U(a,0)  =  sqrt(pi) / (2^{a/2+1/4} Gamma(3/4 + a/2))
//                   U'(a,0) = -sqrt(pi) / (2^{a/2-1/4} Gamma(1/4 + a/2))
//   |z| > 5, Re z >= 0   scaled integral representation (Re a >= 0)
//                   U(a,z) e^{z^2/4} Gamma(a+1/2) =
//                       2 Int_0^inf u^{2a} exp(-u^4/2 - z u^2) du
//   |z| > 5, Re z < 0    Taylor-series continuation of the ODE along the ray
//                   from a series seed; U is non-recessive on every ray with
//                   Re z < 0, so outward continuation is stable there.
// Arguments with Re a < 0 are lifted first through
//   U(a,z) = z U(a+1,z) + (a+3/2) U(a+2,z),
// which walks toward larger a where both branches above are valid.

#include <cmath>
#include <complex>

#include "greenkern/errors.hpp"
#include "greenkern/gamma.hpp"
#include "greenkern/numeric.hpp"
#include "greenkern/quadrature.hpp"

namespace greenkern {

// |U(a,z) e^{z^2/4} z^{1/2+a} - 1| <= 1e-4 holds beyond this radius for
// |a| <= 1 on rays with Re z > 0 (first asymptotic correction
// (a+1/2)(a+3/2)/(2 z^2) evaluated at the worst such a).
inline constexpr double kWeberAsymptoticThreshold = 150.0;

namespace detail {

inline constexpr double kWeberSeriesRadius = 5.0;

inline Cplx weber_u0(const Cplx& a) {
    return std::sqrt(kPi) * std::exp(-(0.5 * a + 0.25) * std::log(2.0)) *
           rgamma(0.75 + 0.5 * a);
}

inline Cplx weber_u0_prime(const Cplx& a) {
    return -std::sqrt(kPi) * std::exp(-(0.5 * a - 0.25) * std::log(2.0)) *
           rgamma(0.25 + 0.5 * a);
}

struct WeberVD {
    Cplx f, df;
};

inline WeberVD weber_series(const Cplx& a, const Cplx& z, const SeriesBudget& budget) {
    // u = U(a,0) y1 + U'(a,0) y2 with even y1, odd y2 and the shared
    // coefficient recurrence (k+2)(k+1) b_{k+2} = a b_k + b_{k-2}/4
    const Cplx c1 = weber_u0(a), c2 = weber_u0_prime(a);
    Cplx be_cur(1.0, 0.0), be_prev(0.0, 0.0);  // b_{2m},   b_{2m-2}
    Cplx bo_cur(1.0, 0.0), bo_prev(0.0, 0.0);  // b_{2m+1}, b_{2m-1}
    Cplx y1(1.0, 0.0), y2 = z, dy1(0.0, 0.0), dy2(1.0, 0.0);
    const Cplx z2 = z * z;
    Cplx p = z;  // z^{2m+1}
    int calm = 0;
    for (int m = 0; m < budget.max_terms; ++m) {
        const int k = 2 * m;
        const Cplx be = (a * be_cur + 0.25 * be_prev) / double((k + 2) * (k + 1));
        const Cplx bo = (a * bo_cur + 0.25 * bo_prev) / double((k + 3) * (k + 2));
        const Cplx t1 = be * p * z;       // z^{2m+2}
        const Cplx t2 = bo * p * z2;      // z^{2m+3}
        y1 += t1;
        y2 += t2;
        dy1 += double(k + 2) * be * p;
        dy2 += double(k + 3) * bo * p * z;
        be_prev = be_cur;
        be_cur = be;
        bo_prev = bo_cur;
        bo_cur = bo;
        p *= z2;
        if (std::abs(t1) + std::abs(t2) <=
            budget.rel_tol * (std::abs(y1) + std::abs(y2)) + budget.abs_tol) {
            if (++calm >= 2) {
                return WeberVD{c1 * y1 + c2 * y2, c1 * dy1 + c2 * dy2};
            }
        } else {
            calm = 0;
        }
    }
    throw BudgetExceeded("weber_u: power series did not converge");
}

// scaled value U e^{z^2/4}; requires Re a >= 0 and converges for any z,
// numerically sensible for Re z >= 0
inline Cplx weber_integral_scaled(const Cplx& a, const Cplx& z) {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-18;
    auto g = [&](double u) -> Cplx {
        if (u <= 0.0) return Cplx(0.0, 0.0);
        const double u2 = u * u;
        return std::exp(2.0 * a * std::log(u) - 0.5 * u2 * u2 - z * u2);
    };
    const QuadratureResult r = integrate_halfline(g, cfg);
    return 2.0 * rgamma(a + 0.5) * r.value;
}

// Taylor continuation of u'' = (z^2/4 + a) u from (w0, y, y') to w1.
inline WeberVD weber_ode_continue(const Cplx& a, Cplx w, WeberVD state, const Cplx& target) {
    constexpr int kOrder = 40;
    Cplx c[kOrder + 1];
    while (std::abs(target - w) > 0.0) {
        const double hmax = std::min(0.5, 12.0 / std::max(1.0, std::abs(w)));
        const double dist = std::abs(target - w);
        const Cplx dir = (target - w) / dist;
        const Cplx h = dir * std::min(hmax, dist);

        c[0] = state.f;
        c[1] = state.df;
        const Cplx q0 = 0.25 * w * w + a;
        for (int k = 0; k + 2 <= kOrder; ++k) {
            Cplx rhs = q0 * c[k];
            if (k >= 1) rhs += 0.5 * w * c[k - 1];
            if (k >= 2) rhs += 0.25 * c[k - 2];
            c[k + 2] = rhs / double((k + 2) * (k + 1));
        }
        Cplx y(0.0, 0.0), yp(0.0, 0.0);
        for (int k = kOrder; k >= 1; --k) {
            y = y * h + c[k];
            yp = yp * h + double(k) * c[k];
        }
        y = y * h + c[0];
        state.f = y;
        state.df = yp;
        w += h;
    }
    return state;
}

inline Cplx weber_u_dispatch(const Cplx& a, const Cplx& z, const SeriesBudget& budget,
                             bool scaled) {
    if (a.real() < 0.0) {
        // lift toward nonnegative Re a; both the series and the lifted
        // branches are linear, so the relation holds for scaled values too
        return z * weber_u_dispatch(a + 1.0, z, budget, scaled) +
               (a + 1.5) * weber_u_dispatch(a + 2.0, z, budget, scaled);
    }
    const double az = std::abs(z);
    // the series cancels like exp(Re z^2 / 2) where U is recessive, so it is
    // only used where that factor stays small
    if (az <= kWeberSeriesRadius && (z * z).real() <= 4.0) {
        const Cplx u = weber_series(a, z, budget).f;
        return scaled ? u * std::exp(0.25 * z * z) : u;
    }
    if (z.real() >= 0.0) {
        const Cplx s = weber_integral_scaled(a, z);
        return scaled ? s : s * std::exp(-0.25 * z * z);
    }
    const Cplx seed_pt = z / az * (kWeberSeriesRadius - 0.5);
    const WeberVD seed = weber_series(a, seed_pt, budget);
    const Cplx u = weber_ode_continue(a, seed_pt, seed, z).f;
    return scaled ? u * std::exp(0.25 * z * z) : u;
}

}  // namespace detail

inline Cplx weber_u(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    budget.validate();
    require_finite(a, "weber_u");
    require_finite(z, "weber_u");
    return detail::weber_u_dispatch(a, z, budget, false);
}

// U(a,z) * exp(z^2/4); removes the Gaussian factor so the asymptotic regime
// stays representable (U itself underflows near z ~ 53 on the real axis).
inline Cplx weber_u_scaled(Cplx a, Cplx z, const SeriesBudget& budget = {}) {
    require_finite(a, "weber_u_scaled");
    require_finite(z, "weber_u_scaled");
    return detail::weber_u_dispatch(a, z, budget, true);
}

}  // namespace greenkern
