#include <doctest.h>

#include <cmath>

#include "comb/exact_oracle.hpp"

using namespace comb;

namespace {
const LatticeParams kDefault{2.0, 2.0};
}

TEST_SUITE_BEGIN("oracle");

TEST_CASE("dispersion rhs at sin nodes and E=0") {
    // a sqrt(E) = m pi  =>  sin term vanishes, f = (-1)^m
    for (int m = 1; m <= 8; ++m) {
        const double E = kDefault.mode_energy(m);
        CHECK(kp_dispersion_rhs(E, kDefault) ==
              doctest::Approx(m % 2 ? -1.0 : 1.0).epsilon(1e-12));
    }
    CHECK(kp_dispersion_rhs(0.0, kDefault) == doctest::Approx(3.0));  // 1 + A a/2
    // continuous across E = 0 under the hyperbolic continuation
    CHECK(std::abs(kp_dispersion_rhs(1e-9, kDefault) -
                   kp_dispersion_rhs(-1e-9, kDefault)) < 1e-7);
    // band-1 bottom sits at cos(ka) = 1
    CHECK(kp_dispersion_rhs(0.741, kDefault) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("band edges, gaps and tops") {
    const auto bands = exact_band_edges(kDefault, 45.0);
    REQUIRE(bands.size() >= 4);
    CHECK(bands[0].lo == doctest::Approx(0.740174).epsilon(1e-5));
    CHECK(bands[0].hi == doctest::Approx(2.467401).epsilon(1e-6));
    CHECK(bands[1].lo == doctest::Approx(4.115858).epsilon(1e-5));
    // tops coincide with the free levels m^2 pi^2 / a^2
    for (int m = 1; m <= 4; ++m)
        CHECK(std::abs(bands[static_cast<std::size_t>(m) - 1].hi - kDefault.mode_energy(m)) < 1e-6);
    const double g1 = bands[1].lo - bands[0].hi;
    const double g2 = bands[2].lo - bands[1].hi;
    const double g3 = bands[3].lo - bands[2].hi;
    CHECK(g1 == doctest::Approx(1.648457).epsilon(2e-5));
    CHECK(g2 == doctest::Approx(1.865257).epsilon(2e-5));
    CHECK(g3 == doctest::Approx(1.932732).epsilon(2e-5));

    CHECK(exact_band_edges(kDefault, 3.0).size() == 1);
    CHECK(exact_band_edges(kDefault, 0.5).empty());  // below the first band bottom
}

TEST_CASE("rho0 analytic values and zeros") {
    CHECK(rho0_analytic(kDefault.mode_energy(1), kDefault) == 0.0);
    CHECK(rho0_analytic(kDefault.mode_energy(3), kDefault) == 0.0);
    CHECK(rho0_analytic(1.0, kDefault) == doctest::Approx(0.2554).epsilon(2e-3));
    CHECK(rho0_analytic(1.0, kDefault) == doctest::Approx(0.25540728453).epsilon(1e-9));
    CHECK(rho0_analytic(2.0, kDefault) == doctest::Approx(0.1457).epsilon(4e-3));
    CHECK(rho0_analytic(2.0, kDefault) == doctest::Approx(0.14561840).epsilon(1e-7));
    // the curve settles on 1/a far from the bands
    CHECK(rho0_analytic(-1e6, kDefault) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("rho0 pole where the bracket vanishes") {
    // bracket 2a/A + 1/E - (a/sqrt(E)) cot(a sqrt(E)) changes sign between the
    // first two free levels; bisect its zero and expect the pole signal there
    auto bracket = [](double E) {
        const double r = std::sqrt(E);
        return 2.0 + 1.0 / E - (2.0 / r) * (std::cos(2.0 * r) / std::sin(2.0 * r));
    };
    double lo = 2.6, hi = 3.0;
    REQUIRE(bracket(lo) > 0.0);
    REQUIRE(bracket(hi) < 0.0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bracket(mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK_THROWS_AS((void)rho0_analytic(0.5 * (lo + hi), kDefault), pole_error);
}

TEST_CASE("density reconstruction") {
    const double a = kDefault.a;
    // even in x, exact at the cell boundary
    CHECK(rho_x_analytic(a / 2, 1.0, kDefault, 500) ==
          rho_x_analytic(-a / 2, 1.0, kDefault, 500));
    CHECK(rho_x_analytic(0.3, 1.0, kDefault, 500) ==
          doctest::Approx(rho_x_analytic(-0.3, 1.0, kDefault, 500)).epsilon(1e-14));

    // period average keeps only the zero mode: integral over the cell = 1/a
    const int n = 20000;
    double avg = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -a / 2 + a * (i + 0.5) / n;
        avg += rho_x_analytic(x, 1.0, kDefault, 200);
    }
    avg /= n;
    CHECK(avg == doctest::Approx(1.0 / a).epsilon(1e-9));

    // x = 0 sum reproduces the closed-form rho(0) as the mode count grows
    CHECK(std::abs(rho_x_analytic(0.0, 1.0, kDefault, 100000) -
                   rho0_analytic(1.0, kDefault)) < 1e-4);

    // nonnegative inside the first two bands
    const auto bands = exact_band_edges(kDefault, 11.0);
    for (int b = 0; b < 2; ++b) {
        for (int s = 0; s < 20; ++s) {
            const double E = bands[static_cast<std::size_t>(b)].lo +
                             (bands[static_cast<std::size_t>(b)].hi -
                              bands[static_cast<std::size_t>(b)].lo) *
                                 (s + 0.5) / 20.0;
            for (int i = 0; i <= 100; ++i) {
                const double x = -a / 2 + a * i / 100.0;
                CHECK(rho_x_analytic(x, E, kDefault, 2000) > -1e-9);
            }
        }
    }
}

TEST_SUITE_END();
