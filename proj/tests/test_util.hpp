#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <cstdint>

#include "greenkern/numeric.hpp"

namespace gk_test {

using greenkern::Cplx;

// deterministic xorshift32 generator, identical on every platform
struct Rng {
    std::uint32_t state;
    explicit Rng(std::uint32_t seed) : state(seed) {}
    double uniform() {
        state ^= state << 13;
        state ^= state >> 17;
        state ^= state << 5;
        return static_cast<double>(state) / 4294967296.0;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline void expect_cplx_near(const Cplx& got, const Cplx& want, double tol,
                             const char* what = "") {
    EXPECT_NEAR(got.real(), want.real(), tol) << what;
    EXPECT_NEAR(got.imag(), want.imag(), tol) << what;
}

inline void expect_rel(const Cplx& got, const Cplx& want, double rel_tol,
                       const char* what = "") {
    const double scale = std::abs(want);
    EXPECT_LE(std::abs(got - want), rel_tol * scale) << what << " got " << got.real() << "+"
                                                     << got.imag() << "i";
}

}  // namespace gk_test
