// Cross-validation of the complex-argument branches against reference values
// computed with mpmath at 25 digits.  These exercise the paths the models
// take for complex spectral parameters: asymptotic/integral branches off the
// real axis, the a-recurrence with complex index, and the left-half-plane
// ODE continuation.

#include <gtest/gtest.h>

#include "greenkern/bessel.hpp"
#include "greenkern/hurwitz.hpp"
#include "greenkern/hypergeom.hpp"
#include "greenkern/models.hpp"
#include "greenkern/weber.hpp"
#include "greenkern/whittaker.hpp"
#include "test_util.hpp"

using namespace greenkern;
using gk_test::expect_rel;

TEST(ComplexBranches, TricomiLargeZ) {
    // complex a through the downward recurrence
    expect_rel(tricomi_psi({-0.3, 0.4}, {25.0, 0.0}),
               {0.7924084146686981, -2.4797593361422210}, 1e-9);
    // complex a through the Laplace integral
    expect_rel(tricomi_psi({0.8, -1.2}, {40.0, 0.0}),
               {-0.0143374083258681, -0.0524183624105350}, 1e-9);
}

TEST(ComplexBranches, KummerAsymptotic) {
    expect_rel(kummer_phi({0.5, 1.0}, {30.0, 0.0}),
               {-51038266635.274117, -112462983616.86943}, 1e-9);
    expect_rel(kummer_phi({2.3, 0.0}, {22.0, -9.0}),
               {-7674193593.2759996, -2495122204.1909231}, 1e-8);
}

TEST(ComplexBranches, BesselIntegralRepresentation) {
    expect_rel(bessel_k0({5.5, 2.0}), {-0.0011684783472741, -0.0017181002934897}, 1e-10);
    expect_rel(bessel_k1({5.5, 2.0}), {-0.0013062104775132, -0.0018198599384548}, 1e-10);
    expect_rel(bessel_k0({45.0, 0.0}), {5.3334561226187249e-21, 0.0}, 1e-10);
}

TEST(ComplexBranches, WeberOffAxis) {
    const Cplx c = std::exp(Cplx(0.0, -0.25 * kPi));
    expect_rel(weber_u({1.7, 0.0}, c * 35.0), {3.9894968810842321e-4, 3.9594331943424579e-5},
               1e-8);
    expect_rel(weber_u({0.5, 0.3}, {6.0, 6.0}), {0.1251947792599804, -0.0792560796453058},
               1e-9);
    // left half-plane: ODE continuation along arg z = 0.6 pi
    const Cplx z = std::exp(Cplx(0.0, 0.6 * kPi)) * 12.0;
    expect_rel(weber_u({1.0, 0.0}, z), {93705392416.471414, -54231294562.093181}, 1e-8);
}

TEST(ComplexBranches, WhittakerComplexIndexAndArgument) {
    expect_rel(whittaker_m({0.3, 0.2}, {2.5, -1.0}), {1.5881219965481689, -1.3739552782212504},
               1e-11);
    expect_rel(whittaker_w({0.3, 0.2}, {2.5, -1.0}), {0.3568069470679660, 0.2622412123166725},
               1e-10);
}

TEST(ComplexBranches, HurwitzLargeImaginary) {
    expect_rel(hurwitz_zeta_half({10.5, 30.0}), {-9.1238651818688842, -6.5760232890231530},
               1e-11);
}

TEST(ComplexBranches, CoulombComplexSpectralParameter) {
    const SpectralPoint s = SpectralPoint::from_zeta({-2.0, 1.5});
    const EvalResult g =
        green_coulomb(Point{0.6, 0.0, 0.0}, Point{0.0, 0.3, 0.2}, s, -1.0);
    expect_rel(g.value, {0.0565575530546398, 0.0298876262029382}, 1e-10);
}
