#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "greenkern/errors.hpp"

namespace greenkern {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Even Bernoulli numbers B_2, B_4, ..., B_16 (Stirling / Euler-Maclaurin
// correction terms).
inline constexpr double kBernoulli2k[8] = {
    1.0 / 6.0,     -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(const Cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Cplx& z, const char* where) {
    if (!is_finite(z)) throw DomainError(std::string(where) + ": non-finite argument");
}

inline double abs2(const Cplx& z) { return std::norm(z); }

// Convergence budget for power-series evaluations.
struct SeriesBudget {
    int max_terms = 400;
    double rel_tol = 1e-15;
    double abs_tol = 1e-300;

    void validate() const {
        if (max_terms < 8) throw DomainError("SeriesBudget: max_terms must be >= 8");
        if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0))
            throw DomainError("SeriesBudget: tolerances must lie in (0,1)");
    }
};

}  // namespace greenkern
