#pragma once

#include <complex>

#include "comb/lattice.hpp"

namespace comb {

// Infinite square well on [0, a], Dirichlet walls; eigenvalues m^2 pi^2 / a^2.
// The anomaly-corrected recursion fixes psi'(a)^2 = 2E/a and closes on the
// position moments alone.

/// <X^n> from the recursion <X^n> = -n(n-1)/(4E) <X^{n-2}> + a^n/(n+1),
/// seeds <X^0> = 1, <X^1> = a/2.
double isw_moment(int n, double E, double a);

/// Same moments from the solved even/odd sums:
///   <X^{2m}>   = (2m)!   (-1/4E)^m sum_{k=0..m} (-4 E a^2)^k / (2k+1)!
///   <X^{2m+1}> = (2m+1)! (-1/4E)^m sum_{k=0..m} (-4 E)^k a^{2k+1} / (2k+2)!
double isw_moment_closed(int n, double E, double a);

/// Fourier mode of the density from the moment power series,
///    c_n = (1/a) sum_k (-i 2 pi n / a)^k <x^k> / k!,
/// truncated at `trunc` terms. At E = m^2 pi^2/a^2 the pattern is
/// c_0 = 1/a, c_{+-m} = -1/(2a), others 0. Throws non_convergence_error when
/// the factorial tail has not collapsed by `trunc` (the series diverges at
/// energies well below the probed mode).
///
/// The co-growing cancellation (the k-th moment evaluation loses O(k) digits
/// near eigen-energies) makes this a multi-precision computation internally.
std::complex<double> isw_fourier_mode(int n, double E, double a, int trunc = 80);

/// Exact eigenstate density (2/a) sin^2(m pi x / a).
double isw_density(double x, int m, double a);

/// Mode-consistency residual |c_0 - 1/a| + sum_{n=1..nmax} |c_n - expected_n|
/// against the pattern of the nearest level m = round(a sqrt(E)/pi).
/// Non-convergent modes contribute the cap (1e9): such energies are
/// maximally inconsistent. Small only at the eigen-energies.
double isw_quantization_residual(double E, double a, int nmax = 3, int trunc = 80);

/// Ratio A rho(0) / (E - n^2 pi^2/a^2) of the lattice density evaluated at
/// E = n^2 pi^2/a^2 + delta; tends to -1 as delta -> 0 (the square-well limit
/// of the lattice moments).
double kp_isw_limit_check(int n, const LatticeParams& p, double delta);

}  // namespace comb
