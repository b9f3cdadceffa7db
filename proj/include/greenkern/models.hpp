#pragma once

// Green functions (resolvent kernels) of the exemplar operators, in units
// hbar = 2m = 1, together with their closed-form renormalized diagonal
// constants where one exists.
//
//   free, dim 1..4      exp/Bessel closed forms
//   Coulomb, -Delta + q/|x|        Hostler-type Whittaker product
//   uniform magnetic field, 3d     gauge phase times a translation-invariant
//                                  factor F given by a Laplace-transformed
//                                  heat-kernel integral
//   inverted oscillator, 1d        parabolic-cylinder product, Im zeta > 0

#include <algorithm>
#include <cmath>
#include <complex>

#include "greenkern/bessel.hpp"
#include "greenkern/errors.hpp"
#include "greenkern/gamma.hpp"
#include "greenkern/hurwitz.hpp"
#include "greenkern/numeric.hpp"
#include "greenkern/quadrature.hpp"
#include "greenkern/spectral.hpp"
#include "greenkern/weber.hpp"
#include "greenkern/whittaker.hpp"

namespace greenkern {

namespace detail {

inline void require_off_spectrum_free(const Cplx& zeta, const char* where) {
    if (on_positive_halfaxis(zeta))
        throw DomainError(std::string(where) + ": zeta lies on the spectrum [0,inf)");
}

// 1/(1-e^{-u}) - 1/u; the difference form (u + expm1(-u))/(u (-expm1(-u)))
// avoids the cancellation of the two 1/u-sized terms
inline double one_minus_exp_inv_minus_inv(double u) {
    if (u < 0.02) {
        const double u2 = u * u;
        return 0.5 + u / 12.0 - u * u2 / 720.0 + u * u2 * u2 / 30240.0;
    }
    const double em = -std::expm1(-u);  // 1 - e^{-u}
    return (u - em) / (u * em);
}

// h(t) = 1/(e^t - 1) - 1/t, bounded on (0, inf)
inline double exp_gap(double t) {
    if (t < 0.02) {
        const double t2 = t * t;
        return -0.5 + t / 12.0 - t * t2 / 720.0 + t * t2 * t2 / 30240.0;
    }
    if (t > 30.0) return std::exp(-t) / (-std::expm1(-t)) - 1.0 / t;
    const double em = std::expm1(t);  // e^t - 1
    return (t - em) / (t * em);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// free Laplacian

inline EvalResult green_free(int dim, double r, const SpectralPoint& s) {
    if (dim < 1 || dim > 4) throw DomainError("green_free: dim must be 1..4");
    if (!(r > 0.0)) throw DomainError("green_free: requires r > 0");
    detail::require_off_spectrum_free(s.zeta, "green_free");
    const Cplx k = s.kappa;
    EvalResult out;
    switch (dim) {
        case 1:
            out.value = std::exp(-k * r) / (2.0 * k);
            out.method = Method::closed_form;
            break;
        case 2: {
            out.value = bessel_k0(k * r) / (2.0 * kPi);
            out.method = std::abs(k * r) <= detail::kBesselSeriesEdge ? Method::series
                                                                      : Method::quadrature;
            out.abs_error = 1e-13 * std::abs(out.value);
            break;
        }
        case 3:
            out.value = std::exp(-k * r) / (4.0 * kPi * r);
            out.method = Method::closed_form;
            break;
        case 4: {
            out.value = k * bessel_k1(k * r) / (4.0 * kPi * kPi * r);
            out.method = std::abs(k * r) <= detail::kBesselSeriesEdge ? Method::series
                                                                      : Method::quadrature;
            out.abs_error = 1e-13 * std::abs(out.value);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coulomb, H = -Delta + q/|x| on R^3
//
// G(x,y;zeta) = Gamma(1-kw)/(4 pi |x-y|)
//               [ W_{kw,1/2}(k u) M'_{kw,1/2}(k v) - W'_{kw,1/2}(k u) M_{kw,1/2}(k v) ]
// with u = |x|+|y|+|x-y|, v = |x|+|y|-|x-y|, kw = -q/(2 k), k = sqrt(-zeta).

inline EvalResult green_coulomb(const Point& x, const Point& y, const SpectralPoint& s,
                                double q) {
    if (x.dim != 3 || y.dim != 3) throw DomainError("green_coulomb: points must be 3d");
    const double r = distance(x, y);
    if (!(r > 0.0)) throw DomainError("green_coulomb: requires x != y");
    detail::require_off_spectrum_free(s.zeta, "green_coulomb");

    const Cplx k = s.kappa;
    const Cplx kw = -q / (2.0 * k);
    const double ax = x.norm(), ay = y.norm();
    const Cplx zu = k * (ax + ay + r);
    const Cplx zv = k * (ax + ay - r);

    const Cplx pref = gamma(1.0 - kw) / (4.0 * kPi * r);  // PoleError at bound states
    const Cplx t1 = whittaker_w(kw, zu) * whittaker_m_prime(kw, zv);
    const Cplx t2 = whittaker_w_prime(kw, zu) * whittaker_m(kw, zv);

    EvalResult out;
    out.value = pref * (t1 - t2);
    out.method = std::abs(zu) <= detail::kHypSeriesRadius ? Method::series : Method::quadrature;
    out.abs_error = 1e-12 * std::abs(pref) * (std::abs(t1) + std::abs(t2));
    return out;
}

// Constant term of the near-origin expansion
//   G(x,0;zeta) = 1/(4 pi |x|) + (q/4 pi) log|x| + coulomb_diag_const + O(|x| log|x|)
inline Cplx coulomb_diag_const(const SpectralPoint& s, double q) {
    detail::require_off_spectrum_free(s.zeta, "coulomb_diag_const");
    const Cplx k = s.kappa;
    if (q == 0.0) return -k / (4.0 * kPi);
    const Cplx w = 1.0 + q / (2.0 * k);
    return -k / (4.0 * kPi) +
           q / (4.0 * kPi) *
               (digamma(w) + std::log(k) + (std::log(2.0) - 1.0) + 2.0 * kEulerGamma);
}

// ---------------------------------------------------------------------------
// uniform magnetic field along x3 with flux density xi
//
// G(x,y;zeta) = landau_phase(x,y,xi) * F(x-y;zeta) where F is rotation
// invariant in the transverse plane and real positive for real zeta below
// the spectrum [2 pi |xi|, inf).

inline Cplx landau_phase(const Point& x, const Point& y, double xi) {
    if (x.dim != 3 || y.dim != 3) throw DomainError("landau_phase: points must be 3d");
    const double wedge = x[0] * y[1] - x[1] * y[0];
    return std::exp(Cplx(0.0, kPi * xi * wedge));
}

inline void require_below_landau_spectrum(const Cplx& zeta, double xi) {
    if (!(zeta.real() < 2.0 * kPi * std::abs(xi)))
        throw DomainError("landau: requires Re zeta < 2 pi |xi|");
}

inline Cplx landau_q(const SpectralPoint& s, double xi) {
    if (xi == 0.0) throw DomainError("landau_q: xi must be nonzero");
    require_below_landau_spectrum(s.zeta, xi);
    const double axi = std::abs(xi);
    const Cplx c = 0.5 - s.zeta / (4.0 * kPi * axi);
    return 0.25 * std::sqrt(axi / kPi) * hurwitz_zeta_half(c);
}

// Green function on the field axis, z > 0:
//   G = f1 + f2,
//   f1 = exp(-sqrt(2 pi |xi| - zeta) z) / (4 pi z)          (closed form)
//   f2 = sqrt|xi|/(2 pi) Int_0^inf (1/(1-e^{-t^2}) - 1/t^2)
//                                exp(-pi|xi| z^2/t^2 - c t^2) dt
inline EvalResult landau_F_axis(double z, const SpectralPoint& s, double xi,
                                const QuadratureConfig& cfg = {}) {
    if (!(z > 0.0)) throw DomainError("landau_F_axis: requires z > 0");
    if (xi == 0.0) throw DomainError("landau_F_axis: xi must be nonzero");
    require_below_landau_spectrum(s.zeta, xi);
    const double axi = std::abs(xi);
    const Cplx c = 0.5 - s.zeta / (4.0 * kPi * axi);
    const double a = kPi * axi * z * z;

    const Cplx f1 = std::exp(-std::sqrt(2.0 * kPi * axi - s.zeta) * z) / (4.0 * kPi * z);

    auto integrand = [&](double t) -> Cplx {
        const double t2 = t * t;
        const double head = a > 0.0 ? std::exp(-a / t2) : 1.0;
        return detail::one_minus_exp_inv_minus_inv(t2) * head * std::exp(-c * t2);
    };
    HalflineShape shape;
    shape.essential_zero = a;
    const QuadratureResult f2 = integrate_halfline(integrand, cfg, shape);

    EvalResult out;
    out.value = f1 + std::sqrt(axi) / (2.0 * kPi) * f2.value;
    out.abs_error = std::sqrt(axi) / (2.0 * kPi) * f2.abs_error_estimate +
                    1e-15 * std::abs(f1);
    out.method = Method::quadrature;
    return out;
}

namespace detail {

// direct quadrature of the Laplace-transformed heat kernel
inline EvalResult landau_F_direct(const Point& dx, const SpectralPoint& s, double xi,
                                  const QuadratureConfig& cfg) {
    const double axi = std::abs(xi);
    const Cplx c = 0.5 - s.zeta / (4.0 * kPi * axi);
    const double perp2 = dx[0] * dx[0] + dx[1] * dx[1];
    const double par2 = dx[2] * dx[2];
    const double b = kPi * axi * (perp2 + par2);

    auto integrand = [&](double t) -> Cplx {
        const double em = std::expm1(t);  // e^t - 1
        const double arg = kPi * axi * (perp2 / em + par2 / t);
        return std::exp(-arg - c * t) /
               ((-std::expm1(-t)) * std::sqrt(t));
    };
    HalflineShape shape;
    shape.essential_zero = b;
    const QuadratureResult r = integrate_halfline(integrand, cfg, shape);

    EvalResult out;
    out.value = std::sqrt(axi) / (4.0 * kPi) * r.value;
    out.abs_error = std::sqrt(axi) / (4.0 * kPi) * r.abs_error_estimate;
    out.method = Method::quadrature;
    return out;
}

// near-diagonal split: F(dx) = F_axis(|dx|) + correction, with the bounded
// gap h(t) isolating the transverse anisotropy
inline EvalResult landau_F_split(const Point& dx, const SpectralPoint& s, double xi,
                                 const QuadratureConfig& cfg) {
    const double axi = std::abs(xi);
    const Cplx c = 0.5 - s.zeta / (4.0 * kPi * axi);
    const double perp2 = dx[0] * dx[0] + dx[1] * dx[1];
    const double r2 = dx.norm2();
    const double b = kPi * axi * r2;

    const EvalResult radial = landau_F_axis(dx.norm(), s, xi, cfg);
    if (perp2 == 0.0) return radial;

    auto integrand = [&](double t) -> Cplx {
        const double gap = std::expm1(-kPi * axi * perp2 * exp_gap(t));
        return gap * std::exp(-b / t - c * t) / ((-std::expm1(-t)) * std::sqrt(t));
    };
    HalflineShape shape;
    shape.essential_zero = b;
    const QuadratureResult corr = integrate_halfline(integrand, cfg, shape);

    EvalResult out;
    out.value = radial.value + std::sqrt(axi) / (4.0 * kPi) * corr.value;
    out.abs_error = radial.abs_error + std::sqrt(axi) / (4.0 * kPi) * corr.abs_error_estimate;
    out.method = Method::quadrature;
    return out;
}

}  // namespace detail

inline EvalResult landau_F(const Point& dx, const SpectralPoint& s, double xi,
                           const QuadratureConfig& cfg = {}) {
    if (dx.dim != 3) throw DomainError("landau_F: point must be 3d");
    if (xi == 0.0) throw DomainError("landau_F: xi must be nonzero");
    if (!(dx.norm2() > 0.0)) throw DomainError("landau_F: requires dx != 0");
    require_below_landau_spectrum(s.zeta, xi);
    const double perp2 = dx[0] * dx[0] + dx[1] * dx[1];
    if (perp2 <= 0.1) return detail::landau_F_split(dx, s, xi, cfg);
    return detail::landau_F_direct(dx, s, xi, cfg);
}

inline EvalResult green_landau(const Point& x, const Point& y, const SpectralPoint& s,
                               double xi, const QuadratureConfig& cfg = {}) {
    EvalResult f = landau_F(x - y, s, xi, cfg);
    f.value *= landau_phase(x, y, xi);
    return f;
}

// ---------------------------------------------------------------------------
// inverted oscillator, H = -d^2/dx^2 - omega^2 x^2 / 4 on R, Im zeta > 0
//
// G(x,y;zeta) = e^{i pi/4} Gamma(1/2 - i zeta/omega) / sqrt(2 pi omega)
//               * U(-i zeta/omega, cw max(x,y)) U(-i zeta/omega, cw max(-x,-y)),
// cw = e^{-i pi/4} sqrt(omega).  The Gamma argument carries 1/omega; the
// product form satisfies the jump condition only with that scaling.

inline EvalResult green_invosc(double x, double y, const SpectralPoint& s, double omega) {
    if (!(omega > 0.0)) throw DomainError("green_invosc: omega must be positive");
    if (!(s.zeta.imag() > 0.0)) throw DomainError("green_invosc: requires Im zeta > 0");
    const Cplx a = Cplx(0.0, -1.0) * s.zeta / omega;
    const Cplx cw = std::exp(Cplx(0.0, -0.25 * kPi)) * std::sqrt(omega);
    const Cplx pref = std::exp(Cplx(0.0, 0.25 * kPi)) * gamma(0.5 + a) /
                      std::sqrt(2.0 * kPi * omega);
    const Cplx u1 = weber_u(a, cw * std::max(x, y));
    const Cplx u2 = weber_u(a, cw * std::max(-x, -y));

    EvalResult out;
    out.value = pref * u1 * u2;
    out.method = std::max(std::abs(x), std::abs(y)) * std::sqrt(omega) <=
                         detail::kWeberSeriesRadius
                     ? Method::series
                     : Method::quadrature;
    out.abs_error = 1e-10 * std::abs(out.value);
    return out;
}

// ---------------------------------------------------------------------------
// uniform dispatch

inline EvalResult green_eval(const GreenModel& model, const Point& x, const Point& y,
                             const SpectralPoint& s, const QuadratureConfig& cfg = {}) {
    validate_model(model);
    if (const Free* f = std::get_if<Free>(&model)) {
        return green_free(f->dim, distance(x, y), s);
    }
    if (const Coulomb3D* c = std::get_if<Coulomb3D>(&model)) {
        return green_coulomb(x, y, s, c->q);
    }
    if (const Landau3D* l = std::get_if<Landau3D>(&model)) {
        return green_landau(x, y, s, l->xi, cfg);
    }
    const InvOsc1D& o = std::get<InvOsc1D>(model);
    if (x.dim != 1 || y.dim != 1) throw DomainError("green_eval: invosc1d needs 1d points");
    return green_invosc(x[0], y[0], s, o.omega);
}

}  // namespace greenkern
