#include <gtest/gtest.h>

#include "greenkern/gamma.hpp"
#include "greenkern/hypergeom.hpp"
#include "greenkern/whittaker.hpp"
#include "test_util.hpp"

using namespace greenkern;
using gk_test::expect_rel;

TEST(Kummer, SmallArguments) {
    expect_rel(kummer_phi({0.37, 0.0}, {0.0, 0.0}), {1.0, 0.0}, 1e-15);
    expect_rel(kummer_phi({0.0, 0.0}, {3.7, 0.0}), {1.0, 0.0}, 1e-15);
    expect_rel(kummer_phi({1.0, 0.0}, {1.0, 0.0}), {1.7182818284590452, 0.0}, 1e-12);
    expect_rel(kummer_phi({0.5, 1.0}, {3.0, -2.0}), {8.3315343746766330, 1.9927433059467192},
               1e-11);
}

TEST(Kummer, LargeArgument) {
    expect_rel(kummer_phi({1.5, 0.0}, {25.0, 0.0}), {16084696383.060914, 0.0}, 1e-8);
}

TEST(Kummer, DerivativeMatchesFiniteDifference) {
    const Cplx a{0.7, 0.0};
    const double h = 1e-6;
    const Cplx fd =
        (kummer_phi(a, {2.3 + h, 0.0}) - kummer_phi(a, {2.3 - h, 0.0})) / (2.0 * h);
    expect_rel(kummer_phi_prime(a, {2.3, 0.0}), fd, 1e-8);
}

TEST(Tricomi, ClosedForms) {
    expect_rel(tricomi_psi({1.0, 0.0}, {2.0, 0.0}), {0.5, 0.0}, 1e-13);
    expect_rel(tricomi_psi({1.0, 0.0}, {0.1, 0.0}), {10.0, 0.0}, 1e-13);
    expect_rel(tricomi_psi({2.0, 0.0}, {1.0, 0.0}), {0.4036526376768059, 0.0}, 1e-10);
    expect_rel(tricomi_psi({1.25, 0.0}, {0.01, 0.0}), {109.02663782477333, 0.0}, 1e-12);
    expect_rel(tricomi_psi({1.3, 0.0}, {0.8, 0.0}), {1.0482726496564714, 0.0}, 1e-11);
    expect_rel(tricomi_psi({0.5, 0.5}, {2.5, 0.0}), {0.6627790288547544, -0.3452584287554167},
               1e-10);
}

TEST(Tricomi, PolynomialLimits) {
    // nonpositive integer a: the function degenerates to a polynomial
    expect_rel(tricomi_psi({0.0, 0.0}, {3.7, 0.0}), {1.0, 0.0}, 1e-14);
    expect_rel(tricomi_psi({-1.0, 0.0}, {1.3, 0.0}), {-0.7, 0.0}, 1e-13);
    expect_rel(tricomi_psi({-3.0, 0.0}, {0.9, 0.0}), {-0.591, 0.0}, 1e-12);
    // near-integer input takes the limit branch instead of erroring
    expect_rel(tricomi_psi({-1.0 + 1e-12, 0.0}, {1.3, 0.0}), {-0.7, 0.0}, 1e-9);
}

TEST(Tricomi, LargeArgumentBranches) {
    expect_rel(tricomi_psi({1.5, 0.0}, {30.0, 0.0}), {0.0059423501804980383, 0.0}, 1e-9);
    expect_rel(tricomi_psi({2.5, 0.0}, {60.0, 0.0}), {3.3770095574322605e-5, 0.0}, 1e-9);
    expect_rel(tricomi_psi({1.3, 0.0}, {25.0, 0.0}), {0.0150045982097980, 0.0}, 1e-9);
    // Re a <= 0: downward recurrence path
    expect_rel(tricomi_psi({-0.7, 0.0}, {25.0, 0.0}), {9.0633067793227763, 0.0}, 1e-9);
}

TEST(Tricomi, DerivativeMatchesFiniteDifference) {
    for (double z : {0.8, 25.0}) {
        const Cplx a{1.3, 0.0};
        const double h = z * 1e-6;
        const Cplx fd = (tricomi_psi(a, {z + h, 0.0}) - tricomi_psi(a, {z - h, 0.0})) / (2.0 * h);
        expect_rel(tricomi_psi_prime(a, {z, 0.0}), fd, 1e-6, "psi'");
    }
}

TEST(Tricomi, ExpansionCoefficientConsistency) {
    // A_{-1} + A_0 + A_1 z + A_2 z^2 + (B_0 + B_1 z + B_2 z^2) log z reproduces
    // Psi(a,2;z) up to an O(z^3 log z) remainder
    const Cplx a{1.25, 0.0};
    const Cplx am1 = rgamma(a);
    const Cplx a0 = (digamma(a) + 2.0 * kEulerGamma - 1.0) * rgamma(a - 1.0);
    const Cplx a1 =
        a * (digamma(a + 1.0) - (1.0 - kEulerGamma) - (1.5 - kEulerGamma)) * rgamma(a - 1.0) /
        2.0;
    const Cplx a2 = a * (a + 1.0) *
                    (digamma(a + 2.0) - (1.5 - kEulerGamma) - (11.0 / 6.0 - kEulerGamma)) *
                    rgamma(a - 1.0) / 12.0;
    const Cplx b0 = rgamma(a - 1.0);
    const Cplx b1 = a * rgamma(a - 1.0) / 2.0;
    const Cplx b2 = a * (a + 1.0) * rgamma(a - 1.0) / 12.0;

    double rem[2];
    const double zs[2] = {1e-3, 1e-2};
    for (int i = 0; i < 2; ++i) {
        const double z = zs[i];
        const Cplx expansion = am1 / z + a0 + a1 * z + a2 * z * z +
                               (b0 + b1 * z + b2 * z * z) * std::log(z);
        rem[i] = std::abs(tricomi_psi(a, {z, 0.0}) - expansion);
        EXPECT_LE(rem[i], 0.5 * z * z * z * std::abs(std::log(z))) << "z=" << z;
    }
    // remainder scales like z^3 (up to the log factor)
    EXPECT_GT(rem[1] / rem[0], 100.0);
    EXPECT_LT(rem[1] / rem[0], 5000.0);
}

TEST(Tricomi, DomainErrors) {
    EXPECT_THROW(tricomi_psi({1.0, 0.0}, {0.0, 0.0}), DomainError);
    EXPECT_THROW(tricomi_psi({1.5, 0.0}, {-30.0, 0.0}), DomainError);
}

TEST(Hypergeom, SeriesBudget) {
    SeriesBudget tight;
    tight.max_terms = 8;
    EXPECT_THROW(kummer_phi({0.7, 0.0}, {19.0, 0.0}, tight), BudgetExceeded);
    SeriesBudget bad;
    bad.max_terms = 2;
    EXPECT_THROW(kummer_phi({0.7, 0.0}, {1.0, 0.0}, bad), DomainError);
    bad = SeriesBudget{};
    bad.rel_tol = 2.0;
    EXPECT_THROW(tricomi_psi({0.7, 0.0}, {1.0, 0.0}, bad), DomainError);
}

TEST(Whittaker, BoundaryValuesExact) {
    for (double k : {-0.7, 0.0, 0.5, 2.0}) {
        EXPECT_EQ(whittaker_m({k, 0.0}, {0.0, 0.0}), Cplx(0.0, 0.0));
        EXPECT_EQ(whittaker_m_prime({k, 0.0}, {0.0, 0.0}), Cplx(1.0, 0.0));
    }
}

TEST(Whittaker, Values) {
    expect_rel(whittaker_m({0.0, 0.0}, {1.0, 0.0}), {1.0421906109874947, 0.0}, 1e-12);
    expect_rel(whittaker_m({0.5, 0.0}, {0.3, 0.0}), {0.2791265339265620, 0.0}, 1e-12);
    expect_rel(whittaker_m_prime({0.5, 0.0}, {0.3, 0.0}), {0.8660696481385551, 0.0}, 1e-12);
    expect_rel(whittaker_w({0.0, 0.0}, {1.0, 0.0}), {0.6065306597126334, 0.0}, 1e-12);
    expect_rel(whittaker_w_prime({0.0, 0.0}, {1.0, 0.0}), {-0.3032653298563167, 0.0}, 1e-12);
    expect_rel(whittaker_w({0.5, 0.0}, {0.3, 0.0}), {0.7199786748905407, 0.0}, 1e-11);
    expect_rel(whittaker_w_prime({0.5, 0.0}, {0.3, 0.0}), {0.2126709103820835, 0.0}, 1e-10);
}

TEST(Whittaker, WNearZeroLimit) {
    // W_{0,1/2}(z) -> 1 as z -> 0+
    expect_rel(whittaker_w({0.0, 0.0}, {1e-8, 0.0}), {1.0, 0.0}, 1e-7);
}

TEST(Whittaker, SmallArgumentExpansion) {
    // W_{kappa,1/2}(z) = A_{-1} + (A_0 - A_{-1}/2) z + B_0 z log z + O(z^2 log z)
    const Cplx kappa{-0.25, 0.0};
    const Cplx a = 1.0 - kappa;
    const double z = 0.01;
    const Cplx am1 = rgamma(a);
    const Cplx a0 = (digamma(a) + 2.0 * kEulerGamma - 1.0) * rgamma(a - 1.0);
    const Cplx b0 = rgamma(a - 1.0);
    const Cplx expansion = am1 + (a0 - 0.5 * am1) * z + b0 * z * std::log(z);
    EXPECT_LE(std::abs(whittaker_w(kappa, {z, 0.0}) - expansion), 5e-4);
}
