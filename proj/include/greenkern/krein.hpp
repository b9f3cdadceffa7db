#pragma once

// Finite point-interaction solver.  The perturbed operator is described by
// the Q-matrix
//     Q_mm(zeta) = G^ren(m,m;zeta),   Q_mn(zeta) = G(m,n;zeta)  (m != n),
// the perturbed Green function by
//     G_M(x,y) = G(x,y) - sum_{mn} G(x,m) [(Q - diag(alpha))^{-1}]_{mn} G(n,y),
// and bound states by det(Q(E) - diag(alpha)) = 0 below the base spectrum.
// The inverse-coupling convention is pinned by the single-point free-3d
// closed form: Q(E) = -sqrt(-E)/(4 pi), bound state at E = -16 pi^2 alpha^2
// for alpha < 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "greenkern/errors.hpp"
#include "greenkern/models.hpp"
#include "greenkern/renorm.hpp"
#include "greenkern/spectral.hpp"

namespace greenkern {

struct KreinSystem {
    GreenModel base;
    std::vector<Point> points;
    std::vector<double> alphas;

    void validate() const {
        validate_model(base);
        if (!std::holds_alternative<Free>(base) && !std::holds_alternative<Landau3D>(base))
            throw DomainError("KreinSystem: base must be free2d, free3d or landau3d");
        if (const Free* f = std::get_if<Free>(&base)) {
            if (f->dim != 2 && f->dim != 3)
                throw DomainError("KreinSystem: free base must be 2d or 3d");
        }
        if (points.empty() || points.size() != alphas.size())
            throw DomainError("KreinSystem: need one coupling per point, at least one point");
        const int dim = model_dimension(base);
        for (const Point& p : points)
            if (p.dim != dim) throw DomainError("KreinSystem: point dimension mismatch");
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (!(distance(points[i], points[j]) > 0.0))
                    throw DomainError("KreinSystem: points must be pairwise distinct");
    }
};

struct QMatrix {
    std::vector<Cplx> entries;  // row major, n x n
    size_t n = 0;
    SpectralPoint zeta;

    Cplx& at(size_t i, size_t j) { return entries[i * n + j]; }
    const Cplx& at(size_t i, size_t j) const { return entries[i * n + j]; }
};

enum class DiagonalMethod { closed_form, extrapolated };

// Closed-form renormalized diagonal of the supported base models.
inline Cplx renormalized_diagonal_closed(const GreenModel& model, const SpectralPoint& s) {
    if (const Free* f = std::get_if<Free>(&model)) {
        detail::require_off_spectrum_free(s.zeta, "renormalized_diagonal_closed");
        if (f->dim == 3) return -s.kappa / (4.0 * kPi);
        if (f->dim == 2) return -(std::log(0.5 * s.kappa) + kEulerGamma) / (2.0 * kPi);
        throw DomainError("renormalized_diagonal_closed: free base must be 2d or 3d");
    }
    if (const Landau3D* l = std::get_if<Landau3D>(&model)) return landau_q(s, l->xi);
    throw DomainError("renormalized_diagonal_closed: unsupported model");
}

inline double spectrum_infimum(const GreenModel& model) {
    if (const Landau3D* l = std::get_if<Landau3D>(&model)) return 2.0 * kPi * std::abs(l->xi);
    return 0.0;
}

inline QMatrix build_q_matrix(const KreinSystem& sys, const SpectralPoint& s,
                              DiagonalMethod method = DiagonalMethod::closed_form,
                              const QuadratureConfig& cfg = {}) {
    sys.validate();
    const size_t n = sys.points.size();
    QMatrix q;
    q.n = n;
    q.zeta = s;
    q.entries.assign(n * n, Cplx(0, 0));

    SingularityFn sing;
    if (method == DiagonalMethod::extrapolated) {
        if (const Landau3D* l = std::get_if<Landau3D>(&sys.base))
            sing = magnetic_singularity_fn(2.0 * kPi * l->xi);
        else
            sing = standard_singularity_fn(model_dimension(sys.base));
    }

    for (size_t i = 0; i < n; ++i) {
        if (method == DiagonalMethod::closed_form) {
            q.at(i, i) = renormalized_diagonal_closed(sys.base, s);
        } else {
            const auto radii = default_renorm_radii();
            q.at(i, i) = renorm_diagonal(sys.base, sys.points[i], s, radii, sing, cfg).value;
        }
        for (size_t j = i + 1; j < n; ++j) {
            q.at(i, j) = green_eval(sys.base, sys.points[i], sys.points[j], s, cfg).value;
            q.at(j, i) = green_eval(sys.base, sys.points[j], sys.points[i], s, cfg).value;
        }
    }
    return q;
}

namespace detail {

// LU with partial pivoting; returns determinant, leaves factors for solves.
struct LU {
    std::vector<Cplx> a;
    std::vector<size_t> piv;
    size_t n = 0;
    Cplx det{1.0, 0.0};
    double min_pivot = 0.0, max_pivot = 0.0;

    explicit LU(const QMatrix& q) : a(q.entries), n(q.n) {
        piv.resize(n);
        det = Cplx(1.0, 0.0);
        min_pivot = std::numeric_limits<double>::infinity();
        max_pivot = 0.0;
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            for (size_t i = k + 1; i < n; ++i)
                if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
            piv[k] = p;
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
                det = -det;
            }
            const Cplx pivot = a[k * n + k];
            const double ap = std::abs(pivot);
            min_pivot = std::min(min_pivot, ap);
            max_pivot = std::max(max_pivot, ap);
            det *= pivot;
            if (ap == 0.0) continue;
            for (size_t i = k + 1; i < n; ++i) {
                const Cplx f = a[i * n + k] / pivot;
                a[i * n + k] = f;
                for (size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
            }
        }
    }

    bool singular() const { return min_pivot <= 1e-14 * std::max(max_pivot, 1.0); }

    std::vector<Cplx> solve(std::vector<Cplx> b) const {
        for (size_t k = 0; k < n; ++k) {
            std::swap(b[k], b[piv[k]]);
            for (size_t i = k + 1; i < n; ++i) b[i] -= a[i * n + k] * b[k];
        }
        for (size_t k = n; k-- > 0;) {
            for (size_t j = k + 1; j < n; ++j) b[k] -= a[k * n + j] * b[j];
            b[k] /= a[k * n + k];
        }
        return b;
    }
};

inline QMatrix q_minus_alpha(const KreinSystem& sys, const SpectralPoint& s,
                             const QuadratureConfig& cfg) {
    QMatrix q = build_q_matrix(sys, s, DiagonalMethod::closed_form, cfg);
    for (size_t i = 0; i < q.n; ++i) q.at(i, i) -= sys.alphas[i];
    return q;
}

}  // namespace detail

inline EvalResult perturbed_green(const KreinSystem& sys, const Point& x, const Point& y,
                                  const SpectralPoint& s, const QuadratureConfig& cfg = {}) {
    sys.validate();
    for (const Point& p : sys.points)
        if (!(distance(p, x) > 0.0) || !(distance(p, y) > 0.0))
            throw DomainError("perturbed_green: x, y must avoid the interaction points");

    const QMatrix qa = detail::q_minus_alpha(sys, s, cfg);
    const detail::LU lu(qa);
    if (lu.singular())
        throw SingularQ("perturbed_green: Q(zeta) - diag(alpha) is singular at this zeta");

    const size_t n = sys.points.size();
    std::vector<Cplx> gx(n), gy(n);
    double err = 0.0;
    for (size_t m = 0; m < n; ++m) {
        const EvalResult ex = green_eval(sys.base, x, sys.points[m], s, cfg);
        const EvalResult ey = green_eval(sys.base, sys.points[m], y, s, cfg);
        gx[m] = ex.value;
        gy[m] = ey.value;
        err = std::max({err, ex.abs_error, ey.abs_error});
    }
    const std::vector<Cplx> w = lu.solve(gy);
    Cplx corr(0, 0);
    for (size_t m = 0; m < n; ++m) corr += gx[m] * w[m];

    EvalResult base = green_eval(sys.base, x, y, s, cfg);
    EvalResult out;
    out.value = base.value - corr;
    out.abs_error = base.abs_error + err * double(n);
    out.method = base.method;
    return out;
}

struct BoundState {
    double energy = 0.0;
    int multiplicity = 1;
};

// Roots of det(Q(E) - diag(alpha)) on [e_lo, e_hi] below the base spectrum,
// located by a 200-point sign scan refined with bisection; sign-preserving
// |det| minima below threshold are reported once with multiplicity 2.
inline std::vector<BoundState> bound_states(const KreinSystem& sys, double e_lo, double e_hi,
                                            double tol, const QuadratureConfig& cfg = {}) {
    sys.validate();
    if (!(tol > 0.0)) throw DomainError("bound_states: tol must be positive");
    if (!(e_lo < e_hi)) throw DomainError("bound_states: need e_lo < e_hi");
    const double inf_spec = spectrum_infimum(sys.base);
    if (!(e_hi < inf_spec))
        throw WindowTouchesSpectrum("bound_states: window must stay strictly below " +
                                    std::to_string(inf_spec));

    auto det_at = [&](double e) -> double {
        const SpectralPoint s = SpectralPoint::from_zeta(Cplx(e, 0.0));
        const QMatrix qa = detail::q_minus_alpha(sys, s, cfg);
        return detail::LU(qa).det.real();  // Hermitian matrix, real determinant
    };

    auto bisect = [&](double a, double b, double fa) -> double {
        while (b - a > tol) {
            const double m = 0.5 * (a + b);
            const double fm = det_at(m);
            if (fm == 0.0) return m;
            if (fa * fm < 0.0) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };

    std::vector<BoundState> roots;
    // uniform scan with bisection at sign changes; sign-preserving dips of
    // |det| are rescanned at finer resolution so that nearly degenerate pairs
    // are separated, and reported with multiplicity 2 once the resolution
    // limit is reached
    constexpr int kScan = 200;
    const std::function<void(double, double, int)> scan = [&](double lo, double hi,
                                                              int depth) {
        std::vector<double> es(kScan + 1), ds(kScan + 1);
        double scale = 0.0;
        for (int i = 0; i <= kScan; ++i) {
            es[i] = lo + (hi - lo) * double(i) / kScan;
            ds[i] = det_at(es[i]);
            scale = std::max(scale, std::abs(ds[i]));
        }
        for (int i = 0; i < kScan; ++i) {
            if (ds[i] == 0.0) {
                roots.push_back({es[i], 1});
            } else if (ds[i] * ds[i + 1] < 0.0) {
                roots.push_back({bisect(es[i], es[i + 1], ds[i]), 1});
            }
        }
        for (int i = 1; i < kScan; ++i) {
            const bool dip = std::abs(ds[i]) <= std::abs(ds[i - 1]) &&
                             std::abs(ds[i]) <= std::abs(ds[i + 1]) &&
                             ds[i] * ds[i - 1] > 0.0 && ds[i] * ds[i + 1] > 0.0 &&
                             std::abs(ds[i]) < 1e-2 * std::max(scale, 1e-30);
            if (!dip) continue;
            if (depth < 4 && es[i + 1] - es[i - 1] > 4.0 * tol) {
                scan(es[i - 1], es[i + 1], depth + 1);
            } else {
                double a = es[i - 1], b = es[i + 1];
                while (b - a > tol) {
                    const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
                    if (std::abs(det_at(m1)) < std::abs(det_at(m2)))
                        b = m2;
                    else
                        a = m1;
                }
                roots.push_back({0.5 * (a + b), 2});
            }
        }
    };
    scan(e_lo, e_hi, 0);

    std::sort(roots.begin(), roots.end(),
              [](const BoundState& l, const BoundState& r) { return l.energy < r.energy; });
    // recursion windows overlap their parent scan; drop duplicates within tol
    std::vector<BoundState> unique;
    for (const BoundState& b : roots) {
        if (!unique.empty() && std::abs(b.energy - unique.back().energy) <= 4.0 * tol)
            continue;
        unique.push_back(b);
    }
    return unique;
}

}  // namespace greenkern
