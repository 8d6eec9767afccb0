#include "comb/dispersion.hpp"

#include <algorithm>
#include <cmath>

namespace comb {

namespace {

// one series term and its magnitude bound; factorials folded incrementally
struct SeriesAccumulator {
    double E, a, A;
    double coeff = 1.0;  // (-1)^n a^{2n} / (2n)!
    double bound_coeff = 1.0;
    int n = 0;
    double sum = 0.0;

    explicit SeriesAccumulator(double E_, const LatticeParams& p)
        : E(E_), a(p.a), A(p.A) {}

    void step() {
        const double p2n = std::pow(E, n) * (1.0 - n * A / (a * E));
        sum += coeff * p2n;
        ++n;
        const double f = a * a / (double(2 * n - 1) * double(2 * n));
        coeff *= -f;
        bound_coeff *= f;
    }

    double tail_bound() const {
        return bound_coeff * std::pow(E, n) * (1.0 + n * A / (a * E));
    }
};

}  // namespace

double cos_ka_series(double E, const LatticeParams& p, int N) {
    if (!(E > 0.0)) throw std::invalid_argument("cos_ka_series: E must be > 0");
    if (N < 0) throw std::invalid_argument("cos_ka_series: N must be >= 0");
    SeriesAccumulator acc(E, p);
    for (int n = 0; n <= N; ++n) acc.step();
    return acc.sum;
}

double cos_ka_series_adaptive(double E, const LatticeParams& p, double tol) {
    if (!(E > 0.0)) throw std::invalid_argument("cos_ka_series: E must be > 0");
    SeriesAccumulator acc(E, p);
    constexpr int max_terms = 400;
    for (int n = 0; n < max_terms; ++n) {
        acc.step();
        // once the term ratio is below 1/4 the remainder is < 2x the bound
        const double ratio = p.a * p.a * E / (double(2 * acc.n + 1) * double(2 * acc.n + 2));
        if (ratio < 0.25 && 2.0 * acc.tail_bound() < tol) return acc.sum;
    }
    throw non_convergence_error("cos_ka_series_adaptive: tail bound not met");
}

DispersionCurve dispersion_curve(const BandInterval& band, const LatticeParams& p,
                                 int samples, double slack) {
    if (samples < 2) throw std::invalid_argument("dispersion_curve: samples must be >= 2");
    DispersionCurve curve;
    curve.band_index = band.index;
    curve.samples.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double E = band.lo + (band.hi - band.lo) * i / (samples - 1);
        double c = cos_ka_series_adaptive(E, p);
        if (c > 1.0 + slack || c < -1.0 - slack)
            throw numeric_error("dispersion_curve: |cos(ka)| > 1 beyond edge slack");
        c = std::clamp(c, -1.0, 1.0);
        curve.samples.emplace_back(E, std::acos(c) / p.a);
    }
    return curve;
}

}  // namespace comb
