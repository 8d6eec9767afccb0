#pragma once

#include <vector>

#include "comb/lattice.hpp"

namespace comb {

struct BandInterval {
    double lo = 0.0;
    double hi = 0.0;
    int index = 0;  // 1-based band ordinal
};

/// Right-hand side of the Kronig-Penney dispersion relation,
///    cos(ka) = cos(a sqrt(E)) + A/(2 sqrt(E)) sin(a sqrt(E)),
/// continued to E <= 0 with the hyperbolic form; f(0) = 1 + A a / 2.
double kp_dispersion_rhs(double E, const LatticeParams& p);

/// Band intervals where |f(E)| <= 1 on (0, e_max], found by bracketing the
/// crossings of f = +-1 on a fine grid and bisecting to 1e-9.
/// Band tops land on the free levels m^2 pi^2 / a^2.
std::vector<BandInterval> exact_band_edges(const LatticeParams& p, double e_max);

/// Closed-form density at the barrier,
///    rho(0) = 2 / (A [2a/A + 1/E - (a/sqrt(E)) cot(a sqrt(E))]),
/// coth continuation for E < 0. Exactly 0 at the mode energies; throws
/// pole_error where the bracket vanishes (rho(0) diverges there).
double rho0_analytic(double E, const LatticeParams& p);

/// Truncated Fourier reconstruction of the cell density on [-a/2, a/2]:
///    rho(x) = 1/a + (1/a) sum_{m=1..modes} A rho(0)/(E - pi^2 m^2/a^2) cos(2 pi m x / a)
double rho_x_analytic(double x, double E, const LatticeParams& p, int modes);

}  // namespace comb
