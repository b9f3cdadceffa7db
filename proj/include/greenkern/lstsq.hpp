#pragma once

// Small dense complex least squares by column-scaled modified Gram-Schmidt.
// The systems here are tall and very thin (<= 5 columns), so no pivoting is
// needed; the scaled R diagonal provides the conditioning estimate.

#include <cmath>
#include <complex>
#include <vector>

#include "greenkern/errors.hpp"
#include "greenkern/numeric.hpp"

namespace greenkern {

struct LstsqResult {
    std::vector<Cplx> coeffs;
    double residual_rms = 0.0;
    double condition = 1.0;
};

inline LstsqResult lstsq(std::vector<std::vector<Cplx>> cols, std::vector<Cplx> rhs,
                         double cond_threshold = 1e12) {
    const size_t n = cols.size();
    const size_t m = rhs.size();
    if (n == 0 || m < n + 1) throw DomainError("lstsq: need at least n+1 rows");
    for (const auto& c : cols)
        if (c.size() != m) throw DomainError("lstsq: ragged column");

    std::vector<double> scale(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        for (const Cplx& v : cols[j]) scale[j] = std::max(scale[j], std::abs(v));
        if (scale[j] == 0.0) scale[j] = 1.0;
        for (Cplx& v : cols[j]) v /= scale[j];
    }

    std::vector<std::vector<Cplx>> r(n, std::vector<Cplx>(n, Cplx(0, 0)));
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < j; ++i) {
            Cplx dot(0, 0);
            for (size_t k = 0; k < m; ++k) dot += std::conj(cols[i][k]) * cols[j][k];
            r[i][j] = dot;
            for (size_t k = 0; k < m; ++k) cols[j][k] -= dot * cols[i][k];
        }
        double nrm = 0.0;
        for (const Cplx& v : cols[j]) nrm += std::norm(v);
        nrm = std::sqrt(nrm);
        r[j][j] = nrm;
        dmax = std::max(dmax, nrm);
        dmin = std::min(dmin, nrm);
        if (nrm == 0.0 || dmax / dmin > cond_threshold)
            throw IllConditioned("lstsq: basis columns nearly dependent on these radii");
        for (Cplx& v : cols[j]) v /= nrm;
    }

    std::vector<Cplx> qtb(n, Cplx(0, 0));
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < m; ++k) qtb[j] += std::conj(cols[j][k]) * rhs[k];

    LstsqResult out;
    out.coeffs.assign(n, Cplx(0, 0));
    for (size_t jj = n; jj-- > 0;) {
        Cplx s = qtb[jj];
        for (size_t k = jj + 1; k < n; ++k) s -= r[jj][k] * out.coeffs[k];
        out.coeffs[jj] = s / r[jj][jj];
    }

    // residual in the original (unscaled) basis
    std::vector<Cplx> fit(m, Cplx(0, 0));
    for (size_t j = 0; j < n; ++j) {
        // cols[j] is now orthonormal; rebuild Q R x instead of keeping A:
        for (size_t k = 0; k < m; ++k) {
            Cplx contrib(0, 0);
            for (size_t i = j; i < n; ++i) contrib += r[j][i] * out.coeffs[i];
            fit[k] += cols[j][k] * contrib;
        }
    }
    double res2 = 0.0;
    for (size_t k = 0; k < m; ++k) res2 += std::norm(rhs[k] - fit[k]);
    out.residual_rms = std::sqrt(res2 / double(m));
    out.condition = dmax / dmin;

    for (size_t j = 0; j < n; ++j) out.coeffs[j] /= scale[j];
    return out;
}

}  // namespace greenkern
