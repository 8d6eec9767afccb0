#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

// Dirac-comb lattice: V(x) = A * sum_m delta(x - m a), H = p^2 + V(x),
// units hbar = 1, 2m = 1.
namespace comb {

inline constexpr std::string_view version = "0.1.0";

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct missing_moment_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LatticeParams {
    double a = 2.0;  // lattice period
    double A = 2.0;  // delta-barrier strength (energy * length)

    LatticeParams() = default;
    LatticeParams(double period, double strength) : a(period), A(strength) {
        if (!(a > 0.0)) throw std::invalid_argument("LatticeParams: period a must be > 0");
        if (!(A > 0.0)) throw std::invalid_argument("LatticeParams: strength A must be > 0");
    }

    // free-lattice level pi^2 m^2 / a^2; the t_m moments and rho(0) have poles here
    double mode_energy(int m) const {
        const double w = M_PI * m / a;
        return w * w;
    }
};

// true when E coincides with a mode energy pi^2 m^2/a^2 for some 1 <= m <= m_max
inline bool near_pole(double E, const LatticeParams& p, int m_max,
                      double eps = 1e-12) {
    if (E <= 0.0) return false;
    const int m = static_cast<int>(std::lround(std::sqrt(E) * p.a / M_PI));
    if (m < 1 || m > m_max) return false;
    const double Em = p.mode_energy(m);
    return std::abs(E - Em) < eps * std::max(1.0, Em);
}

}  // namespace comb
