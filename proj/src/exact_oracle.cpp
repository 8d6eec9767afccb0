#include "comb/exact_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace comb {

double kp_dispersion_rhs(double E, const LatticeParams& p) {
    if (E > 0.0) {
        const double r = std::sqrt(E);
        return std::cos(p.a * r) + p.A / (2.0 * r) * std::sin(p.a * r);
    }
    if (E < 0.0) {
        const double s = std::sqrt(-E);
        return std::cosh(p.a * s) + p.A / (2.0 * s) * std::sinh(p.a * s);
    }
    return 1.0 + p.A * p.a / 2.0;
}

namespace {

// |f(E)| <= 1 ?
bool inside_band(double E, const LatticeParams& p) {
    return std::abs(kp_dispersion_rhs(E, p)) <= 1.0;
}

// bisect the allowed/forbidden boundary between e0 (state s0) and e1
double bisect_edge(double e0, double e1, bool s0, const LatticeParams& p) {
    for (int it = 0; it < 80 && e1 - e0 > 1e-9; ++it) {
        const double mid = 0.5 * (e0 + e1);
        if (inside_band(mid, p) == s0)
            e0 = mid;
        else
            e1 = mid;
    }
    return 0.5 * (e0 + e1);
}

}  // namespace

std::vector<BandInterval> exact_band_edges(const LatticeParams& p, double e_max) {
    if (!(e_max > 0.0)) throw std::invalid_argument("exact_band_edges: e_max must be > 0");
    // A > 0 keeps f(E) > 1 for E <= 0, so all bands live at E > 0.
    const double step = 1e-3;
    std::vector<double> edges;
    double e_prev = std::min(1e-6, e_max / 2);
    bool s_prev = inside_band(e_prev, p);
    for (double e = e_prev + step; e <= e_max + step / 2; e += step) {
        const double ec = std::min(e, e_max);
        const bool s = inside_band(ec, p);
        if (s != s_prev) edges.push_back(bisect_edge(e_prev, ec, s_prev, p));
        e_prev = ec;
        s_prev = s;
        if (ec >= e_max) break;
    }
    if (edges.size() % 2 == 1 && inside_band(e_max, p))
        edges.push_back(e_max);  // scan ended inside a band
    std::vector<BandInterval> bands;
    for (std::size_t i = 0; i + 1 < edges.size(); i += 2)
        bands.push_back({edges[i], edges[i + 1], static_cast<int>(bands.size()) + 1});
    return bands;
}

double rho0_analytic(double E, const LatticeParams& p) {
    const double a = p.a;
    const double A = p.A;
    double bracket;
    if (E == 0.0) {
        bracket = 2.0 * a / A + a * a / 3.0;  // small-E limit of 1/E - (a/sqrt(E)) cot(a sqrt(E))
    } else if (E > 0.0) {
        // exact zero at the mode energies m^2 pi^2 / a^2
        if (near_pole(E, p, 1 + static_cast<int>(std::sqrt(E) * a / M_PI))) return 0.0;
        const double r = std::sqrt(E);
        const double s = std::sin(a * r);
        if (s == 0.0) return 0.0;
        const double cot = std::cos(a * r) / s;
        bracket = 2.0 * a / A + 1.0 / E - (a / r) * cot;
    } else {
        const double s = std::sqrt(-E);
        const double coth = std::cosh(a * s) / std::sinh(a * s);
        bracket = 2.0 * a / A + 1.0 / E + (a / s) * coth;
    }
    if (std::abs(bracket) < 1e-12)
        throw pole_error("rho0_analytic: rho(0) diverges at E = " + std::to_string(E));
    return 2.0 / (A * bracket);
}

double rho_x_analytic(double x, double E, const LatticeParams& p, int modes) {
    if (modes < 1) throw std::invalid_argument("rho_x_analytic: modes must be >= 1");
    if (near_pole(E, p, modes))
        throw pole_error("rho_x_analytic: E coincides with a mode energy");
    const double r0 = rho0_analytic(E, p);
    const double w = 2.0 * M_PI / p.a;
    double s = 0.0;
    for (int m = modes; m >= 1; --m)
        s += p.A * r0 / (E - p.mode_energy(m)) * std::cos(w * m * x);
    return (1.0 + s) / p.a;
}

}  // namespace comb
