#pragma once

#include <complex>
#include <vector>

#include "comb/lattice.hpp"

namespace comb {

// treatment of the divergent sum_m 1 appearing in the p^4 moments
enum class Regularization {
    finite_k,  // sum over the 2K+1 retained modes
    zeta       // 1 + 2 zeta(0) = 0
};

enum class Rho0Source { finite_k, analytic };

/// Finite-mode density at the barrier,
///    rho(0) = (a - A sum_{m=1..K} 1/(E - pi^2 m^2/a^2))^{-1}
double rho0_finite_k(double E, const LatticeParams& p, int K);

/// <t_n> = (A rho(0)/2) / (E - n^2 pi^2/a^2) for n != 0; <t_0> = 1.
/// At E = n^2 pi^2/a^2 with rho(0) = 0 returns the analytic limit -1/2,
/// otherwise throws pole_error there.
double t_moment(int n, double E, const LatticeParams& p, double rho0);

/// Mixed moments <t_n p^s> for s <= 4 (closed forms):
///   s=0: <t_n>
///   s=1: -(n pi/a) <t_n>
///   s=2: E <t_n> - A rho(0)
///   s=3: -(n pi/a) (E <t_n> - 2 A rho(0))
///   s=4: E^2 <t_n> - A rho(0) [2E + 4 n^2 (pi/a)^2 - (A/a) S]
/// with S = 2K+1 (finite_k) or 0 (zeta).
double tn_p_moment(int n, int s, double E, const LatticeParams& p, double rho0,
                   int K, Regularization reg);

/// Same moments from the double recursion
///   <t_n p^{s+2}> = (E - 4n^2(pi/a)^2) <t_n p^s> - 4n(pi/a) <t_n p^{s+1}>
///                   - (A/a) sum_{m=-K..K} <t_{m+n} p^s>
/// iterated numerically with the m-sum truncated to the 2K+1 retained modes.
double tn_p_moment_recursive(int n, int s, double E, const LatticeParams& p,
                             double rho0, int K);

/// Zeta-regularized even momentum moments <p^{2s}> = E^s (1 - s A rho(0) / E).
double p_even_moment(int s, double E, const LatticeParams& p, double rho0);

// Values <t_n p^s> memoized at one (E, K, reg); the s = 0 row is precomputed
// for |n| <= K since every constraint-matrix entry reads it.
class MomentTable {
public:
    MomentTable(double E, const LatticeParams& p, int K, Regularization reg,
                Rho0Source source = Rho0Source::analytic);

    double t(int n) const;  // <t_n>, |n| <= K
    double tn_p(int n, int s) const { return tn_p_moment(n, s, E_, params_, rho0_, K_, reg_); }

    double energy() const { return E_; }
    double rho0() const { return rho0_; }
    int cutoff() const { return K_; }
    Regularization reg() const { return reg_; }
    const LatticeParams& params() const { return params_; }

private:
    double E_;
    LatticeParams params_;
    int K_;
    Regularization reg_;
    double rho0_;
    std::vector<double> t_;  // <t_q>, q = 0..K
};

// Fourier modes of a periodic potential, V(x) = sum_m V_m t_m with
// V_{-m} = conj(V_m).
class FourierPotential {
public:
    FourierPotential(double period, std::vector<std::complex<double>> modes_0_to_max);

    std::complex<double> mode(int m) const;
    int max_mode() const { return static_cast<int>(modes_.size()) - 1; }
    double period() const { return period_; }

    // Dirac comb: every V_m = A/a
    static FourierPotential dirac_comb(const LatticeParams& p, int m_max);
    // V(x) = 2 c cos(2 pi x / a):  V_{+-1} = c
    static FourierPotential cosine(double c, double period);

private:
    double period_;
    std::vector<std::complex<double>> modes_;  // index m >= 0
};

/// Residual of the Fourier-mode recursion
///    2n [E - n^2 (pi/a)^2] <t_n> = sum_{m=-M..M} (2n + m) V_m <t_{n+m}>.
/// Zero in the truncation limit for moments satisfying the closed forms;
/// at n = 0 it reduces to the <V'> = 0 identity.
std::complex<double> fourier_recursion_residual(int n, double E,
                                                const FourierPotential& pot,
                                                const MomentTable& moments,
                                                int m_trunc);

}  // namespace comb
