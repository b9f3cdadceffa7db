#include <gtest/gtest.h>

#include <cmath>

#include "greenkern/quadrature.hpp"
#include "test_util.hpp"

using namespace greenkern;
using gk_test::Rng;

namespace {
Cplx realf(double v) { return Cplx(v, 0.0); }
}  // namespace

TEST(Interval, Polynomials) {
    auto r = integrate_interval([](double t) { return realf(t * t); }, 0.0, 1.0);
    EXPECT_NEAR(r.value.real(), 1.0 / 3.0, 1e-14);
    EXPECT_GT(r.evaluations, 0);
}

TEST(Interval, Sine) {
    auto r = integrate_interval([](double t) { return realf(std::sin(t)); }, 0.0, kPi);
    EXPECT_NEAR(r.value.real(), 2.0, 1e-13);
}

TEST(Interval, LogEndpointSingularity) {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    auto r = integrate_interval([](double t) { return realf(std::log(t)); }, 0.0, 1.0, cfg);
    EXPECT_NEAR(r.value.real(), -1.0, 1e-10);
}

TEST(Halfline, Gaussian) {
    auto r = integrate_halfline([](double t) { return realf(std::exp(-t * t)); });
    EXPECT_NEAR(r.value.real(), 0.8862269254527580, 1e-12);
}

TEST(Halfline, SqrtEndpoint) {
    HalflineShape shape;
    shape.sqrt_endpoint = true;
    auto r = integrate_halfline(
        [](double t) { return realf(std::exp(-t) / std::sqrt(t)); }, QuadratureConfig{}, shape);
    EXPECT_NEAR(r.value.real(), 1.7724538509055160, 1e-11);
}

TEST(Halfline, EssentialZero) {
    HalflineShape shape;
    shape.essential_zero = 1.0;
    auto r = integrate_halfline(
        [](double t) { return realf(std::exp(-t * t - 1.0 / (t * t))); }, QuadratureConfig{},
        shape);
    EXPECT_NEAR(r.value.real(), 0.1199377719680614, 1e-11);
}

TEST(Halfline, GaussianPairIdentity) {
    Rng rng(77u);
    for (int i = 0; i < 20; ++i) {
        const double b = rng.uniform(0.1, 10.0), c = rng.uniform(0.1, 10.0);
        HalflineShape shape;
        shape.essential_zero = c;
        const auto r = integrate_halfline(
            [&](double t) { return realf(std::exp(-b * t * t - c / (t * t))); },
            QuadratureConfig{}, shape);
        const double exact = 0.5 * std::sqrt(kPi / b) * std::exp(-2.0 * std::sqrt(b * c));
        EXPECT_LE(std::abs(r.value.real() - exact),
                  std::max(10.0 * r.abs_error_estimate, 1e-15))
            << "b=" << b << " c=" << c;
    }
}

TEST(Quadrature, Additivity) {
    auto f = [](double t) { return realf(std::exp(-t) * std::sin(3.0 * t)); };
    const auto whole = integrate_interval(f, 0.0, 5.0);
    const auto left = integrate_interval(f, 0.0, 2.0);
    const auto right = integrate_interval(f, 2.0, 5.0);
    EXPECT_LE(std::abs(whole.value - left.value - right.value),
              whole.abs_error_estimate + left.abs_error_estimate + right.abs_error_estimate +
                  1e-14);
}

TEST(Quadrature, Linearity) {
    auto f = [](double t) { return realf(std::exp(-t * t)); };
    auto g = [](double t) { return realf(1.0 / (1.0 + t * t)); };
    const auto fg = integrate_interval(
        [&](double t) { return 2.0 * f(t) + 3.0 * g(t); }, 0.0, 4.0);
    const auto fo = integrate_interval(f, 0.0, 4.0);
    const auto go = integrate_interval(g, 0.0, 4.0);
    EXPECT_NEAR(fg.value.real(), 2.0 * fo.value.real() + 3.0 * go.value.real(), 1e-11);
}

TEST(Quadrature, Deterministic) {
    auto run = [] {
        HalflineShape shape;
        shape.essential_zero = 0.7;
        return integrate_halfline(
            [](double t) { return realf(std::exp(-2.0 * t - 0.7 / t) / std::sqrt(t + 1.0)); },
            QuadratureConfig{}, shape);
    };
    const auto a = run();
    const auto b = run();
    EXPECT_EQ(a.value.real(), b.value.real());
    EXPECT_EQ(a.value.imag(), b.value.imag());
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Quadrature, NonFiniteIntegrand) {
    EXPECT_THROW(integrate_interval(
                     [](double t) {
                         return realf(t > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0);
                     },
                     0.0, 1.0),
                 NonFiniteIntegrand);
}

TEST(Quadrature, ToleranceNotMetCarriesBestValue) {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 4;
    cfg.abs_tol = 1e-15;
    cfg.rel_tol = 1e-15;
    try {
        integrate_interval([](double t) { return realf(std::pow(std::abs(t - 0.3371), -0.5)); },
                           0.0, 1.0, cfg);
        FAIL() << "expected ToleranceNotMet";
    } catch (const ToleranceNotMet& e) {
        EXPECT_GT(e.error_estimate, 0.0);
        EXPECT_GT(std::abs(e.best_value), 0.0);
    }
}

TEST(Quadrature, ConfigValidation) {
    QuadratureConfig cfg;
    cfg.rel_tol = 0.0;
    EXPECT_THROW(integrate_interval([](double) { return realf(1.0); }, 0.0, 1.0, cfg),
                 DomainError);
    cfg = QuadratureConfig{};
    cfg.max_subdivisions = 2;
    EXPECT_THROW(integrate_interval([](double) { return realf(1.0); }, 0.0, 1.0, cfg),
                 DomainError);
    EXPECT_THROW(integrate_interval([](double) { return realf(1.0); }, 1.0, 1.0), DomainError);
}
