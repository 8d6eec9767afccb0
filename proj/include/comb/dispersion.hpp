#pragma once

#include <vector>

#include "comb/exact_oracle.hpp"

namespace comb {

struct DispersionCurve {
    int band_index = 0;
    std::vector<std::pair<double, double>> samples;  // (E, k), k in [0, pi/a]
};

/// Partial sums of
///    cos(ka) = sum_n (-1)^n a^{2n}/(2n)! <p^{2n}>,  <p^{2s}> = E^s (1 - s A/(a E)),
/// the even-momentum series built on the cell-averaged density <rho(0)> = 1/a.
/// Converges absolutely for all E > 0 and sums to kp_dispersion_rhs.
double cos_ka_series(double E, const LatticeParams& p, int N);

/// Truncation chosen adaptively from the factorial tail bound
///    |term_n| <= (a^2 E)^n/(2n)! (1 + n A/(a E))  with target `tol`.
double cos_ka_series_adaptive(double E, const LatticeParams& p, double tol = 1e-10);

/// k(E) = arccos(cos_ka_series(E))/a sampled uniformly across a band.
/// |cos(ka)| may exceed 1 by at most `slack` at the edges (clamped);
/// larger violations are a numeric error.
DispersionCurve dispersion_curve(const BandInterval& band, const LatticeParams& p,
                                 int samples, double slack = 1e-9);

}  // namespace comb
