#include "comb/moments.hpp"

#include <cmath>

#include "comb/exact_oracle.hpp"

namespace comb {

double rho0_finite_k(double E, const LatticeParams& p, int K) {
    if (K < 1) throw std::invalid_argument("rho0_finite_k: K must be >= 1");
    if (near_pole(E, p, K))
        throw pole_error("rho0_finite_k: E coincides with a mode energy");
    double s = 0.0;
    for (int m = K; m >= 1; --m) s += 1.0 / (E - p.mode_energy(m));
    const double bracket = p.a - p.A * s;
    if (std::abs(bracket) < 1e-12)
        throw numeric_error("rho0_finite_k: finite-mode sum diverges at E = " +
                            std::to_string(E));
    return 1.0 / bracket;
}

double t_moment(int n, double E, const LatticeParams& p, double rho0) {
    if (n == 0) return 1.0;
    const double En = p.mode_energy(n);
    if (std::abs(E - En) < 1e-12 * std::max(1.0, En)) {
        // at the mode energy the closed form is 0/0; the limit of
        // A rho(0)/(E - En) is -1, hence <t_n> -> -1/2
        if (std::abs(rho0) < 1e-12) return -0.5;
        throw pole_error("t_moment: pole at E = n^2 pi^2/a^2 with rho(0) != 0");
    }
    return (p.A * rho0 / 2.0) / (E - En);
}

double tn_p_moment(int n, int s, double E, const LatticeParams& p, double rho0,
                   int K, Regularization reg) {
    const double t = t_moment(n, E, p, rho0);
    const double w = M_PI / p.a;
    const double Ar = p.A * rho0;
    switch (s) {
        case 0:
            return t;
        case 1:
            return -n * w * t;
        case 2:
            return E * t - Ar;
        case 3:
            return -n * w * (E * t - 2.0 * Ar);
        case 4: {
            const double S = reg == Regularization::finite_k ? 2.0 * K + 1.0 : 0.0;
            return E * E * t - Ar * (2.0 * E + 4.0 * n * n * w * w - (p.A / p.a) * S);
        }
        default:
            throw std::invalid_argument("tn_p_moment: s must be in 0..4");
    }
}

double tn_p_moment_recursive(int n, int s, double E, const LatticeParams& p,
                             double rho0, int K) {
    if (s < 0 || s > 4) throw std::invalid_argument("tn_p_moment_recursive: s in 0..4");
    const double w = M_PI / p.a;
    const auto s0 = [&](int j) { return t_moment(j, E, p, rho0); };
    const auto s1 = [&](int j) { return -j * w * s0(j); };
    const auto s2 = [&](int j) { return E * s0(j) - p.A * rho0; };
    if (s == 0) return s0(n);
    if (s == 1) return s1(n);
    if (s == 2) return s2(n);
    const auto window_sum = [&](auto&& row, int j) {
        double acc = 0.0;
        for (int m = -K; m <= K; ++m) acc += row(j + m);
        return acc;
    };
    const auto s3 = [&](int j) {
        return (E - 4.0 * j * j * w * w) * s1(j) - 4.0 * j * w * s2(j) -
               (p.A / p.a) * window_sum(s1, j);
    };
    if (s == 3) return s3(n);
    return (E - 4.0 * n * n * w * w) * s2(n) - 4.0 * n * w * s3(n) -
           (p.A / p.a) * window_sum(s2, n);
}

double p_even_moment(int s, double E, const LatticeParams& p, double rho0) {
    if (s < 0) throw std::invalid_argument("p_even_moment: s must be >= 0");
    if (E == 0.0) throw std::invalid_argument("p_even_moment: E must be nonzero");
    return std::pow(E, s) * (1.0 - s * p.A * rho0 / E);
}

MomentTable::MomentTable(double E, const LatticeParams& p, int K,
                         Regularization reg, Rho0Source source)
    : E_(E), params_(p), K_(K), reg_(reg) {
    if (K < 1) throw std::invalid_argument("MomentTable: K must be >= 1");
    rho0_ = source == Rho0Source::analytic ? rho0_analytic(E, p)
                                           : rho0_finite_k(E, p, K);
    t_.resize(static_cast<std::size_t>(K) + 1);
    for (int q = 0; q <= K; ++q) t_[static_cast<std::size_t>(q)] = t_moment(q, E_, params_, rho0_);
}

double MomentTable::t(int n) const {
    const int q = std::abs(n);
    if (q > K_)
        throw missing_moment_error("MomentTable: mode " + std::to_string(n) +
                                   " beyond cutoff " + std::to_string(K_));
    return t_[static_cast<std::size_t>(q)];
}

FourierPotential::FourierPotential(double period,
                                   std::vector<std::complex<double>> modes_0_to_max)
    : period_(period), modes_(std::move(modes_0_to_max)) {
    if (!(period_ > 0.0)) throw std::invalid_argument("FourierPotential: period must be > 0");
    if (modes_.empty()) throw std::invalid_argument("FourierPotential: no modes");
}

std::complex<double> FourierPotential::mode(int m) const {
    const int q = std::abs(m);
    if (q >= static_cast<int>(modes_.size())) return {0.0, 0.0};
    const auto v = modes_[static_cast<std::size_t>(q)];
    return m < 0 ? std::conj(v) : v;  // real potential: V_{-m} = conj(V_m)
}

FourierPotential FourierPotential::dirac_comb(const LatticeParams& p, int m_max) {
    // the comb has an infinite flat mode spectrum; materialize a window
    std::vector<std::complex<double>> v(static_cast<std::size_t>(m_max) + 1,
                                        {p.A / p.a, 0.0});
    return FourierPotential(p.a, std::move(v));
}

FourierPotential FourierPotential::cosine(double c, double period) {
    return FourierPotential(period, {{0.0, 0.0}, {c, 0.0}});
}

std::complex<double> fourier_recursion_residual(int n, double E,
                                                const FourierPotential& pot,
                                                const MomentTable& moments,
                                                int m_trunc) {
    if (std::abs(n) + m_trunc > moments.cutoff())
        throw missing_moment_error(
            "fourier_recursion_residual: moment table cutoff " +
            std::to_string(moments.cutoff()) + " < |n| + m_trunc");
    const LatticeParams& p = moments.params();
    const double w = M_PI / p.a;
    const double lhs = 2.0 * n * (E - n * n * w * w) * moments.t(n);
    std::complex<double> rhs{0.0, 0.0};
    for (int m = -m_trunc; m <= m_trunc; ++m)
        rhs += (2.0 * n + m) * pot.mode(m) * moments.t(n + m);
    return std::complex<double>(lhs, 0.0) - rhs;
}

}  // namespace comb
