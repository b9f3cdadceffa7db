#pragma once

// On-diagonal renormalization: standard singular kernels S(x,y), extraction
// of G^ren(x,x;zeta) = lim_{y->x} [G(x,y;zeta) - S(x,y)] by near-diagonal
// sampling plus polynomial extrapolation, least-squares fitting of singular
// coefficients, and a probe for the spectral-parameter (in)dependence of the
// singularity.

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "greenkern/errors.hpp"
#include "greenkern/lstsq.hpp"
#include "greenkern/models.hpp"
#include "greenkern/numeric.hpp"
#include "greenkern/spectral.hpp"

namespace greenkern {

// S(x,y) = (1/2pi) log(1/d) in 2d, 1/(4 pi d) in 3d.  No r-independent
// regularization exists in dimension 4 and above.
inline double standard_singularity(int dim, double r) {
    if (!(r > 0.0)) throw DomainError("standard_singularity: requires r > 0");
    if (dim == 2) return std::log(1.0 / r) / (2.0 * kPi);
    if (dim == 3) return 1.0 / (4.0 * kPi * r);
    throw DomainError("standard_singularity: defined only for dim 2 and 3");
}

// Phase-dressed 3d singularity of the uniform-field operator:
// exp(i B (x wedge y)_3 / 2) / (4 pi |x-y|).
inline Cplx magnetic_singularity(const Point& x, const Point& y, double B) {
    if (x.dim != 3 || y.dim != 3) throw DomainError("magnetic_singularity: points must be 3d");
    const double r = distance(x, y);
    if (!(r > 0.0)) throw DomainError("magnetic_singularity: requires x != y");
    const double wedge = x[0] * y[1] - x[1] * y[0];
    return std::exp(Cplx(0.0, 0.5 * B * wedge)) / (4.0 * kPi * r);
}

using SingularityFn = std::function<Cplx(const Point&, const Point&)>;

inline SingularityFn standard_singularity_fn(int dim) {
    return [dim](const Point& a, const Point& b) -> Cplx {
        return Cplx(standard_singularity(dim, distance(a, b)), 0.0);
    };
}

inline SingularityFn magnetic_singularity_fn(double B) {
    return [B](const Point& a, const Point& b) { return magnetic_singularity(a, b, B); };
}

struct RenormValue {
    Cplx value{0.0, 0.0};
    double extrapolation_error = 0.0;
};

struct SingularityFit {
    Cplx c_inv2{0.0, 0.0};
    Cplx c_inv1{0.0, 0.0};
    Cplx c_log{0.0, 0.0};
    Cplx c_const{0.0, 0.0};
    double residual = 0.0;
    std::vector<double> radii_used;
};

namespace basis {
inline constexpr unsigned inv2 = 1u;
inline constexpr unsigned inv1 = 2u;
inline constexpr unsigned log = 4u;
inline constexpr unsigned constant = 8u;
}  // namespace basis

inline SingularityFit fit_singularity(std::span<const std::pair<double, Cplx>> samples,
                                      unsigned basis_flags) {
    std::vector<std::function<double(double)>> fns;
    std::vector<unsigned> which;
    if (basis_flags & basis::inv2) {
        fns.push_back([](double r) { return 1.0 / (r * r); });
        which.push_back(basis::inv2);
    }
    if (basis_flags & basis::inv1) {
        fns.push_back([](double r) { return 1.0 / r; });
        which.push_back(basis::inv1);
    }
    if (basis_flags & basis::log) {
        fns.push_back([](double r) { return std::log(r); });
        which.push_back(basis::log);
    }
    if (basis_flags & basis::constant) {
        fns.push_back([](double) { return 1.0; });
        which.push_back(basis::constant);
    }
    if (fns.empty()) throw DomainError("fit_singularity: empty basis");
    if (samples.size() < fns.size() + 1)
        throw DomainError("fit_singularity: need at least one more sample than basis functions");
    double rmin = samples[0].first, rmax = samples[0].first;
    for (const auto& s : samples) {
        if (!(s.first > 0.0)) throw DomainError("fit_singularity: radii must be positive");
        rmin = std::min(rmin, s.first);
        rmax = std::max(rmax, s.first);
    }
    if (rmax / rmin < 100.0)
        throw DomainError("fit_singularity: radii must span at least two decades");

    std::vector<std::vector<Cplx>> cols(fns.size(), std::vector<Cplx>(samples.size()));
    std::vector<Cplx> rhs(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        rhs[i] = samples[i].second;
        for (size_t j = 0; j < fns.size(); ++j) cols[j][i] = Cplx(fns[j](samples[i].first), 0.0);
    }
    const LstsqResult ls = lstsq(std::move(cols), std::move(rhs), 1e10);

    SingularityFit out;
    out.residual = ls.residual_rms;
    for (const auto& s : samples) out.radii_used.push_back(s.first);
    for (size_t j = 0; j < which.size(); ++j) {
        switch (which[j]) {
            case basis::inv2: out.c_inv2 = ls.coeffs[j]; break;
            case basis::inv1: out.c_inv1 = ls.coeffs[j]; break;
            case basis::log: out.c_log = ls.coeffs[j]; break;
            case basis::constant: out.c_const = ls.coeffs[j]; break;
        }
    }
    return out;
}

namespace detail {

inline void validate_radii(std::span<const double> radii) {
    if (radii.size() < 4) throw DomainError("renorm: need at least 4 radii");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw DomainError("renorm: radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw DomainError("renorm: radii must be strictly decreasing");
    }
}

// remainder basis of the extrapolation model, per model family, matching the
// structure of each kernel's near-diagonal expansion:
//   Coulomb   r log r, r and their squares
//   free 2d   even powers with their log partners (the K_0 series has no
//             odd terms)
//   free 3d   plain powers of the analytic exponential remainder
//   Landau    o(r) remainder with a smooth quadratic component
inline std::vector<std::function<double(double)>> extrapolation_basis(const GreenModel& m) {
    if (std::holds_alternative<Coulomb3D>(m)) {
        return {[](double r) { return r * std::log(r); }, [](double r) { return r; },
                [](double r) { return r * r * std::log(r) * std::log(r); },
                [](double r) { return r * r * std::log(r); }};
    }
    if (const Free* f = std::get_if<Free>(&m); f && f->dim == 2) {
        return {[](double r) { return r * r; }, [](double r) { return r * r * std::log(r); },
                [](double r) { return r * r * r * r; },
                [](double r) { return r * r * r * r * std::log(r); }};
    }
    if (std::holds_alternative<Landau3D>(m)) {
        return {[](double r) { return r; }, [](double r) { return r * r; }};
    }
    return {[](double r) { return r; }, [](double r) { return r * r; },
            [](double r) { return r * r * r; }, [](double r) { return r * r * r * r; }};
}

inline Point direction_for(const GreenModel& m, int which) {
    const int dim = model_dimension(m);
    Point e;
    e.dim = dim;
    if (std::holds_alternative<Landau3D>(m) && which == 0) {
        e[2] = 1.0;  // field axis first, transverse probe second
    } else {
        e[0] = 1.0;
    }
    return e;
}

struct ExtrapOutcome {
    Cplx limit;
    double err;
};

inline ExtrapOutcome extrapolate_limit(const GreenModel& model,
                                       std::span<const double> radii,
                                       const std::vector<Cplx>& values) {
    auto corr = extrapolation_basis(model);
    if (corr.size() > radii.size() - 2) corr.resize(radii.size() - 2);
    auto fit_prefix = [&](size_t count) -> Cplx {
        std::vector<std::vector<Cplx>> cols(1 + corr.size(), std::vector<Cplx>(count));
        std::vector<Cplx> rhs(count);
        for (size_t i = 0; i < count; ++i) {
            rhs[i] = values[i];
            cols[0][i] = Cplx(1.0, 0.0);
            for (size_t j = 0; j < corr.size(); ++j)
                cols[1 + j][i] = Cplx(corr[j](radii[i]), 0.0);
        }
        return lstsq(std::move(cols), std::move(rhs)).coeffs[0];
    };

    // successive estimates on growing prefixes of the (decreasing) radii
    const size_t nmin = 2 + corr.size();
    std::vector<Cplx> estimates;
    for (size_t count = nmin; count <= radii.size(); ++count)
        estimates.push_back(fit_prefix(count));
    const Cplx limit = estimates.back();
    std::vector<double> diffs;
    for (size_t i = 1; i < estimates.size(); ++i)
        diffs.push_back(std::abs(estimates[i] - estimates[i - 1]));
    if (diffs.size() >= 3) {
        const double early = diffs.front(), late = diffs.back();
        if (late > 10.0 * early && late > 1e-6 * (1.0 + std::abs(limit)))
            throw ExtrapolationDiverged("renorm_diagonal: successive estimates grow");
    }
    double err = diffs.empty() ? 0.0 : diffs.back();
    return ExtrapOutcome{limit, err};
}

}  // namespace detail

inline RenormValue renorm_diagonal(const GreenModel& model, const Point& x,
                                   const SpectralPoint& s, std::span<const double> radii,
                                   const SingularityFn& singularity,
                                   const QuadratureConfig& cfg = {}) {
    validate_model(model);
    detail::validate_radii(radii);
    const bool two_directions = std::holds_alternative<Landau3D>(model);

    detail::ExtrapOutcome main{};
    double extra_err = 0.0;
    for (int dir = 0; dir < (two_directions ? 2 : 1); ++dir) {
        const Point e = detail::direction_for(model, dir);
        std::vector<Cplx> vals;
        double eval_err = 0.0;
        for (double r : radii) {
            Point y = x;
            for (int i = 0; i < y.dim; ++i) y[i] += r * e[i];
            const EvalResult g = green_eval(model, y, x, s, cfg);
            vals.push_back(g.value - singularity(y, x));
            eval_err = std::max(eval_err, g.abs_error);
        }
        const detail::ExtrapOutcome o = detail::extrapolate_limit(model, radii, vals);
        if (dir == 0) {
            main = o;
            extra_err = eval_err;
        } else {
            extra_err = std::max(extra_err, std::abs(o.limit - main.limit));
        }
    }
    return RenormValue{main.limit, main.err + extra_err};
}

// default radii grid: 12 log-spaced points from 1e-1 down to 1e-5
inline std::vector<double> default_renorm_radii(int n = 12, double r_hi = 1e-1,
                                                double r_lo = 1e-5) {
    std::vector<double> radii(n);
    for (int i = 0; i < n; ++i)
        radii[i] = r_hi * std::pow(r_lo / r_hi, double(i) / double(n - 1));
    return radii;
}

struct ZetaProbeReport {
    bool bounded = false;
    Cplx fitted_log_slope{0.0, 0.0};
    double max_variation = 0.0;
    Cplx limit{0.0, 0.0};
    double limit_error = 0.0;
};

// Samples D(r) = G(r;zeta1) - G(r;zeta2) near the diagonal and reports
// whether the difference stays bounded (singularity independent of the
// spectral parameter) together with the fitted log r coefficient.
inline ZetaProbeReport zeta_independence_probe(const GreenModel& model,
                                               const SpectralPoint& z1,
                                               const SpectralPoint& z2,
                                               std::span<const double> radii,
                                               const QuadratureConfig& cfg = {}) {
    validate_model(model);
    detail::validate_radii(radii);
    if (radii.front() / radii.back() < 100.0)
        throw DomainError("zeta_independence_probe: radii must span at least two decades");

    const int dim = model_dimension(model);
    Point x0;
    x0.dim = dim;
    const Point e = detail::direction_for(model, 0);

    std::vector<Cplx> diff;
    for (double r : radii) {
        Point y = x0;
        for (int i = 0; i < dim; ++i) y[i] += r * e[i];
        const EvalResult g1 = green_eval(model, y, x0, z1, cfg);
        const EvalResult g2 = green_eval(model, y, x0, z2, cfg);
        diff.push_back(g1.value - g2.value);
    }

    ZetaProbeReport rep;
    for (size_t i = 0; i < diff.size(); ++i)
        for (size_t j = i + 1; j < diff.size(); ++j)
            rep.max_variation = std::max(rep.max_variation, std::abs(diff[i] - diff[j]));

    std::vector<std::vector<Cplx>> cols(2, std::vector<Cplx>(diff.size()));
    std::vector<Cplx> rhs = diff;
    for (size_t i = 0; i < diff.size(); ++i) {
        cols[0][i] = Cplx(1.0, 0.0);
        cols[1][i] = Cplx(std::log(radii[i]), 0.0);
    }
    const LstsqResult ls = lstsq(std::move(cols), std::move(rhs));
    rep.fitted_log_slope = ls.coeffs[1];
    rep.limit = ls.coeffs[0];
    rep.limit_error = ls.residual_rms;
    rep.bounded = rep.max_variation < 10.0 * std::max(ls.residual_rms, 1e-8) ||
                  rep.max_variation < 1e-3;
    return rep;
}

}  // namespace greenkern
