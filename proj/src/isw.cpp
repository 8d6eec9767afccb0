#include "comb/isw.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

#include "comb/exact_oracle.hpp"

namespace comb {

namespace {

using mp = boost::multiprecision::cpp_bin_float_100;

const mp& pi_mp() {
    static const mp value = 4 * atan(mp(1));
    return value;
}

mp closed_moment(int n, const mp& E, const mp& a) {
    if (n % 2 == 0) {
        const int m = n / 2;
        mp term = 1, sum = 1;
        const mp x = -4 * E * a * a;
        for (int k = 1; k <= m; ++k) {
            term *= x / (2 * k * (2 * k + 1));
            sum += term;
        }
        mp pref = 1;
        for (int k = 1; k <= m; ++k) pref *= mp(2 * k - 1) * (2 * k) / (-4 * E);
        return pref * sum;
    }
    const int m = (n - 1) / 2;
    mp term = a / 2, sum = a / 2;  // k = 0: a/(2!)
    const mp x = -4 * E * a * a;
    for (int k = 1; k <= m; ++k) {
        term *= x / ((2 * k + 1) * (2 * k + 2));
        sum += term;
    }
    mp pref = 1;
    for (int k = 1; k <= m; ++k) pref *= mp(2 * k) * (2 * k + 1) / (-4 * E);
    return pref * sum;
}

std::vector<mp> recursion_moments(int nmax, const mp& E, const mp& a) {
    std::vector<mp> v(static_cast<std::size_t>(nmax) + 1);
    v[0] = 1;
    if (nmax >= 1) v[1] = a / 2;
    for (int n = 2; n <= nmax; ++n)
        v[static_cast<std::size_t>(n)] =
            -mp(n) * (n - 1) / (4 * E) * v[static_cast<std::size_t>(n) - 2] +
            boost::multiprecision::pow(a, n) / (n + 1);
    return v;
}

}  // namespace

double isw_moment(int n, double E, double a) {
    if (n < 0) throw std::invalid_argument("isw_moment: n must be >= 0");
    if (!(E > 0.0)) throw std::invalid_argument("isw_moment: E must be > 0");
    return recursion_moments(n, mp(E), mp(a))[static_cast<std::size_t>(n)]
        .convert_to<double>();
}

double isw_moment_closed(int n, double E, double a) {
    if (n < 0) throw std::invalid_argument("isw_moment_closed: n must be >= 0");
    if (!(E > 0.0)) throw std::invalid_argument("isw_moment_closed: E must be > 0");
    return closed_moment(n, mp(E), mp(a)).convert_to<double>();
}

std::complex<double> isw_fourier_mode(int n, double E, double a, int trunc) {
    if (!(E > 0.0)) throw std::invalid_argument("isw_fourier_mode: E must be > 0");
    if (trunc < 8) throw std::invalid_argument("isw_fourier_mode: trunc too small");
    const mp Ea(E), aa(a);
    const mp w = 2 * pi_mp() * n / aa;
    const auto moments = recursion_moments(trunc, Ea, aa);
    mp re = 0, im = 0, wk = 1, kfact = 1, tail = 0;
    for (int k = 0; k <= trunc; ++k) {
        if (k > 0) {
            wk *= w;
            kfact *= k;
        }
        const mp term = wk * moments[static_cast<std::size_t>(k)] / kfact;
        switch (k % 4) {  // (-i)^k cycle
            case 0: re += term; break;
            case 1: im -= term; break;
            case 2: re -= term; break;
            case 3: im += term; break;
        }
        if (k > trunc - 8) tail = std::max(tail, boost::multiprecision::abs(term));
    }
    if (n != 0 && tail > mp(1e-8) / aa)
        throw non_convergence_error("isw_fourier_mode: series tail above bound at trunc");
    return {(re / aa).convert_to<double>(), (im / aa).convert_to<double>()};
}

double isw_density(double x, int m, double a) {
    if (m < 1) throw std::invalid_argument("isw_density: m must be >= 1");
    const double s = std::sin(m * M_PI * x / a);
    return 2.0 / a * s * s;
}

double isw_quantization_residual(double E, double a, int nmax, int trunc) {
    constexpr double cap = 1e9;
    const int mq = static_cast<int>(std::lround(std::sqrt(E) * a / M_PI));
    double r = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        double expected_re = 0.0;
        if (n == 0)
            expected_re = 1.0 / a;
        else if (n == mq)
            expected_re = -1.0 / (2.0 * a);
        try {
            const auto c = isw_fourier_mode(n, E, a, trunc);
            r += std::abs(c - std::complex<double>(expected_re, 0.0));
        } catch (const non_convergence_error&) {
            r += cap;
        }
    }
    return std::min(r, 4.0 * cap);
}

double kp_isw_limit_check(int n, const LatticeParams& p, double delta) {
    if (n == 0) throw std::invalid_argument("kp_isw_limit_check: n must be nonzero");
    if (!(delta > 0.0)) throw pole_error("kp_isw_limit_check: delta must be > 0");
    const double En = p.mode_energy(n);
    return p.A * rho0_analytic(En + delta, p) / delta;
}

}  // namespace comb
