#pragma once

#include <optional>
#include <vector>

#include "comb/constraint_matrix.hpp"
#include "comb/exact_oracle.hpp"

namespace comb {

struct ScanConfig {
    LatticeParams params{};
    int K = 100;
    int power = 0;
    double e_lo = -2.0;
    double e_hi = 30.0;
    double e_step = 0.005;
    double tol = 1e-9;
    Regularization reg = Regularization::finite_k;
    // analytic rho(0) reproduces the reference band-gap table; the finite-mode
    // source is kept selectable
    Rho0Source rho0_source = Rho0Source::analytic;
    bool refine_edges = false;  // bisect band edges instead of grid quantization
    int threads = 0;            // 0 = hardware concurrency (capped by COMB_BOOTSTRAP_THREADS)
};

struct ScanPoint {
    double E = 0.0;
    bool allowed = false;
    bool skipped = false;  // pole / solver failure at this grid point
    double min_eig = 0.0;
};

struct GapInfo {
    int index = 0;  // 1-based: gap between bands index and index+1
    double width = 0.0;
};

struct BandSpectrum {
    std::vector<BandInterval> allowed;
    std::vector<GapInfo> gaps;
    std::optional<double> e_min;  // empty = unbounded below (grid floor allowed)
    bool unbounded_below = false;
};

struct ScanResult {
    BandSpectrum spectrum;
    std::vector<ScanPoint> points;
};

/// Energy grid for a scan; grid points landing on a mode energy are nudged
/// by +e_step/10.
std::vector<double> scan_grid(const ScanConfig& cfg);

/// PSD-constraint sweep: allowed mask on the grid converted to maximal
/// intervals, gap widths between consecutive intervals, and the minimum
/// allowed energy (flagged unbounded-below when the grid floor is allowed).
ScanResult scan(const ScanConfig& cfg);

struct MinEnergy {
    enum class Kind { value, unbounded_below, none_allowed } kind = Kind::value;
    double value = 0.0;
};

/// Lowest allowed grid energy, refined by bisection on the PSD boundary to
/// e_step/100. Power 0 is unbounded below by construction and rejected.
MinEnergy min_allowed_energy(const ScanConfig& cfg);

/// Second spatial moment over one period centred at the barrier:
///    <x^2> = a^2/12 + sum_{m=1..K} [A rho(0)/(E - pi^2 m^2/a^2)] a^2 (-1)^m/(2 pi^2 m^2)
double x2_moment(double E, const LatticeParams& p, int K);

/// Lowest E on the grid with <x^2><p^2> >= 1/4, where <p^2> = E - A rho(0);
/// refined by bisection to e_step/100.
double heisenberg_min_energy(const LatticeParams& p, int K, const ScanConfig& grid);

struct ConvergenceRow {
    int K = 0;
    int power = 0;
    std::vector<double> gaps;  // first three gap widths
    MinEnergy e_min;
};

/// Per (K, power): first three gap widths and the minimum allowed energy,
/// with bisection-refined band edges.
std::vector<ConvergenceRow> convergence_study(const LatticeParams& params,
                                              const std::vector<int>& Ks,
                                              const std::vector<int>& powers,
                                              ScanConfig base = {});

}  // namespace comb
