#include <gtest/gtest.h>

#include "greenkern/hurwitz.hpp"
#include "test_util.hpp"

using namespace greenkern;
using gk_test::expect_rel;
using gk_test::Rng;

TEST(HurwitzHalf, Values) {
    expect_rel(hurwitz_zeta_half({1.0, 0.0}), {-1.4603545088095868, 0.0}, 1e-12);
    expect_rel(hurwitz_zeta_half({2.0, 0.0}), {-2.4603545088095868, 0.0}, 1e-12);
    expect_rel(hurwitz_zeta_half({1e4, 0.0}), {-199.99499995833333, 0.0}, 1e-13);
    expect_rel(hurwitz_zeta_half({0.03, 0.0}), {4.2744060256210799, 0.0}, 1e-12);
    expect_rel(hurwitz_zeta_half({2.5, -1.5}), {-3.0030525239860285, 0.9957398688937640},
               1e-12);
}

TEST(HurwitzHalf, Recurrence) {
    Rng rng(99u);
    for (int i = 0; i < 100; ++i) {
        const Cplx v(rng.uniform(0.1, 100.0), rng.uniform(-10.0, 10.0));
        const Cplx lhs = hurwitz_zeta_half(v) - hurwitz_zeta_half(v + 1.0);
        EXPECT_LE(std::abs(lhs - 1.0 / std::sqrt(v)), 1e-10);
    }
}

TEST(HurwitzHalf, HermiteRelation) {
    double prev = std::numeric_limits<double>::infinity();
    for (double v : {10.0, 100.0, 1000.0, 10000.0}) {
        const double w = hurwitz_zeta_half({v, 0.0}).real() + 2.0 * std::sqrt(v);
        EXPECT_GT(w, 0.0);
        EXPECT_LT(w, 1.0 / std::sqrt(v));
        EXPECT_LT(w, prev);
        prev = w;
    }
}

TEST(HurwitzHalf, Domain) {
    EXPECT_THROW(hurwitz_zeta_half({0.0, 1.0}), DomainError);
    EXPECT_THROW(hurwitz_zeta_half({-2.0, 0.0}), DomainError);
}
