#pragma once

// Adaptive quadrature on finite intervals and on (0, inf).
//
// Panels use an open Chebyshev (Fejer-first-kind) rule: the integrand is
// sampled at cos((2j+1)pi/(2n)) so endpoints are never evaluated, which
// lets adaptive bisection walk into integrable endpoint singularities.
// The panel error is |I_32 - I_16|, the worst panel is bisected until the
// summed estimate meets max(abs_tol, rel_tol*|value|).
//
// Half-line integrals are assembled from a head piece on (0, split_point]
// and a tail piece on [split_point, inf) mapped rationally by
// t = s + u/(1-u); the rational map keeps integrands with very long decay
// scales reachable within O(log) bisections.  Two head treatments can be
// requested by the caller, who knows the integrand shape:
//   sqrt_endpoint     t = u^2, removes a t^{-1/2} endpoint factor;
//   essential_zero    t = 1/w, turns an exp(-a/t)-type essential zero into
//                     an exponentially decaying tail.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "greenkern/errors.hpp"
#include "greenkern/numeric.hpp"

namespace greenkern {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    double split_point = 1.0;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0))
            throw DomainError("QuadratureConfig: tolerances must lie in (0,1)");
        if (max_subdivisions < 4)
            throw DomainError("QuadratureConfig: max_subdivisions must be >= 4");
        if (!(split_point > 0.0))
            throw DomainError("QuadratureConfig: split_point must be positive");
    }
};

struct QuadratureResult {
    Cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

// Integrand shape hints for integrate_halfline.
struct HalflineShape {
    bool sqrt_endpoint = false;
    double essential_zero = 0.0;  // a > 0 declares an exp(-a/t)-type zero head
};

namespace detail {

struct FejerRule {
    std::vector<double> x;  // open Chebyshev nodes on (-1,1)
    std::vector<double> w;  // interpolatory weights, sum to 2
};

inline FejerRule make_fejer_rule(int n) {
    FejerRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int j = 0; j < n; ++j) {
        const double th = (2.0 * j + 1.0) * kPi / (2.0 * n);
        r.x[j] = std::cos(th);
        double w = 1.0;
        for (int k = 2; k <= n - 2; k += 2) w += 2.0 / (1.0 - double(k) * k) * std::cos(k * th);
        r.w[j] = 2.0 * w / n;
    }
    return r;
}

inline const FejerRule& fejer16() {
    static const FejerRule r = make_fejer_rule(16);
    return r;
}

inline const FejerRule& fejer32() {
    static const FejerRule r = make_fejer_rule(32);
    return r;
}

using Integrand = std::function<Cplx(double)>;

struct Panel {
    int piece = 0;
    double a = 0.0, b = 0.0;
    Cplx value{0.0, 0.0};
    double err = 0.0;
    long seq = 0;
    bool splittable = true;
};

inline Cplx apply_rule(const Integrand& f, const FejerRule& rule, double a, double b,
                       long& evals) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    Cplx s(0.0, 0.0);
    for (size_t j = 0; j < rule.x.size(); ++j) {
        const Cplx v = f(m + h * rule.x[j]);
        ++evals;
        if (!is_finite(v))
            throw NonFiniteIntegrand("integrand returned non-finite value at t=" +
                                     std::to_string(m + h * rule.x[j]));
        s += rule.w[j] * v;
    }
    return h * s;
}

inline void evaluate_panel(const Integrand& f, Panel& p, long& evals) {
    const Cplx fine = apply_rule(f, fejer32(), p.a, p.b, evals);
    const Cplx coarse = apply_rule(f, fejer16(), p.a, p.b, evals);
    p.value = fine;
    p.err = std::abs(fine - coarse);
}

inline Cplx pairwise_sum(const std::vector<Cplx>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) return v[lo];
    const size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

struct Piece {
    Integrand g;
    double a, b;
};

inline QuadratureResult adaptive(const std::vector<Piece>& pieces,
                                 const QuadratureConfig& cfg) {
    cfg.validate();
    QuadratureResult res;
    std::vector<Panel> panels;
    long seq = 0;
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
        Panel p;
        p.piece = i;
        p.a = pieces[i].a;
        p.b = pieces[i].b;
        p.seq = seq++;
        evaluate_panel(pieces[i].g, p, res.evaluations);
        panels.push_back(p);
    }

    int splits = 0;
    while (true) {
        Cplx total(0.0, 0.0);
        double err = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            err += p.err;
        }
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) break;

        // worst splittable panel; ties resolved by insertion order
        int worst = -1;
        for (int i = 0; i < static_cast<int>(panels.size()); ++i) {
            if (!panels[i].splittable) continue;
            if (worst < 0 || panels[i].err > panels[worst].err ||
                (panels[i].err == panels[worst].err && panels[i].seq < panels[worst].seq))
                worst = i;
        }
        if (worst < 0 || splits >= cfg.max_subdivisions)
            throw ToleranceNotMet("quadrature: subdivision budget exhausted", total, err);

        Panel& p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b) ||
            (p.b - p.a) < 1e-15 * std::max({std::abs(p.a), std::abs(p.b), 1.0})) {
            p.splittable = false;
            continue;
        }
        ++splits;
        Panel right;
        right.piece = p.piece;
        right.a = mid;
        right.b = p.b;
        right.seq = seq++;
        p.b = mid;
        p.seq = seq++;
        evaluate_panel(pieces[p.piece].g, p, res.evaluations);
        evaluate_panel(pieces[right.piece].g, right, res.evaluations);
        panels.push_back(right);
    }

    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) {
        if (l.piece != r.piece) return l.piece < r.piece;
        return l.a < r.a;
    });
    std::vector<Cplx> vals;
    vals.reserve(panels.size());
    double err = 0.0;
    for (const Panel& p : panels) {
        vals.push_back(p.value);
        err += p.err;
    }
    res.value = pairwise_sum(vals, 0, vals.size());
    res.abs_error_estimate = err;
    return res;
}

// [a, inf) with the rational map t = a + u/(1-u).
inline Piece tail_piece(Integrand f, double a) {
    return Piece{[f = std::move(f), a](double u) -> Cplx {
                     const double om = 1.0 - u;
                     const double t = a + u / om;
                     if (!std::isfinite(t)) return Cplx(0.0, 0.0);
                     return f(t) / (om * om);
                 },
                 0.0, 1.0};
}

}  // namespace detail

template <typename F>
QuadratureResult integrate_interval(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    if (!(a < b)) throw DomainError("integrate_interval: requires a < b");
    std::vector<detail::Piece> pieces;
    pieces.push_back(detail::Piece{detail::Integrand(std::forward<F>(f)), a, b});
    return detail::adaptive(pieces, cfg);
}

template <typename F>
QuadratureResult integrate_halfline(F&& f, const QuadratureConfig& cfg = {},
                                    HalflineShape shape = {}) {
    const double s = cfg.split_point;
    detail::Integrand fi(std::forward<F>(f));
    std::vector<detail::Piece> pieces;
    if (shape.essential_zero > 0.0) {
        // head (0, s]:  t = 1/w maps to [1/s, inf) with exp(-a w) decay
        pieces.push_back(detail::tail_piece(
            [fi](double w) -> Cplx { return fi(1.0 / w) / (w * w); }, 1.0 / s));
    } else if (shape.sqrt_endpoint) {
        // head (0, s]:  t = u^2 removes a t^{-1/2} factor
        pieces.push_back(detail::Piece{
            [fi](double u) -> Cplx { return 2.0 * u * fi(u * u); }, 0.0, std::sqrt(s)});
    } else {
        pieces.push_back(detail::Piece{fi, 0.0, s});
    }
    pieces.push_back(detail::tail_piece(fi, s));
    return detail::adaptive(pieces, cfg);
}

}  // namespace greenkern
