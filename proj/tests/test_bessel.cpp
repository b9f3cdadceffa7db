#include <gtest/gtest.h>

#include "greenkern/bessel.hpp"
#include "test_util.hpp"

using namespace greenkern;
using gk_test::expect_rel;

TEST(BesselK, HalfOrderClosedForm) {
    expect_rel(bessel_k_half({1.0, 0.0}), {0.4610685044478946, 0.0}, 1e-13);
    for (double x : {0.1, 1.0, 10.0}) {
        const Cplx closed = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        EXPECT_LE(std::abs(bessel_k_half({x, 0.0}) - closed), 1e-12);
    }
}

TEST(BesselK, RealValues) {
    expect_rel(bessel_k0({1.0, 0.0}), {0.4210244382407083, 0.0}, 1e-11);
    expect_rel(bessel_k1({1.0, 0.0}), {0.6019072301972346, 0.0}, 1e-11);
    expect_rel(bessel_k0({0.001, 0.0}), {7.0236888005623813, 0.0}, 1e-11);
    expect_rel(bessel_k1({1e-6, 0.0}), {999999.9999927843, 0.0}, 1e-11);
    expect_rel(bessel_k1({0.001, 0.0}), {999.9962381560856, 0.0}, 1e-11);
    expect_rel(bessel_k1({30.0, 0.0}), {2.1677320018915494e-14, 0.0}, 1e-10);
}

TEST(BesselK, ComplexValues) {
    expect_rel(bessel_k0({2.0, 3.0}), {-0.0829685265676255, 0.0279496036351834}, 1e-10);
    expect_rel(bessel_k1({2.0, 3.0}), {-0.0864999764812817, 0.0390614340052145}, 1e-10);
    expect_rel(bessel_k0({8.0, -5.0}), {7.1973202419279495e-5, -1.1468397080590236e-4}, 1e-10);
}

TEST(BesselK, BranchOverlap) {
    // series and integral representation must agree near the switch radius
    for (double x : {4.2, 4.9}) {
        const Cplx s = detail::bessel_k0_series({x, 0.0});
        const Cplx i = detail::bessel_k_integral(0, {x, 0.0});
        EXPECT_LE(std::abs(s - i), 5e-11 * std::abs(s)) << "x=" << x;
        const Cplx s1 = detail::bessel_k1_series({x, 0.0});
        const Cplx i1 = detail::bessel_k_integral(1, {x, 0.0});
        EXPECT_LE(std::abs(s1 - i1), 5e-11 * std::abs(s1)) << "x=" << x;
    }
}

TEST(BesselK, SmallArgumentStructure) {
    // K1(z) = 1/z + (z/2) log(z/2) (1 + O(z^2)) + analytic part
    const double z = 1e-3;
    const Cplx rest = bessel_k1({z, 0.0}) - 1.0 / z - 0.5 * z * std::log(0.5 * z);
    // remaining analytic part at this order: (z/4)(2*EulerGamma - 1)
    EXPECT_NEAR(rest.real(), 0.25 * z * (2.0 * kEulerGamma - 1.0), 1e-9);
}

TEST(BesselK, DomainErrors) {
    EXPECT_THROW(bessel_k0({-1.0, 0.5}), DomainError);
    EXPECT_THROW(bessel_k1({0.0, 2.0}), DomainError);
    EXPECT_THROW(bessel_k_half({-0.2, 0.0}), DomainError);
}
