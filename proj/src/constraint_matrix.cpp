#include "comb/constraint_matrix.hpp"

#include <cmath>

#include "comb/exact_oracle.hpp"

namespace comb {

double matrix_entry(int power, int n, int m, double E, const LatticeParams& p,
                    double rho0, double sreg) {
    const double w = M_PI / p.a;
    const double t = t_moment(n - m, E, p, rho0);
    const double Ar = p.A * rho0;
    switch (power) {
        case 0:
            return t;
        case 1:
            return w * (n + m) * t;
        case 2:
            return (4.0 * w * w * n * m + E) * t - Ar;
        case 3:
            return w * (n + m) *
                   ((3.0 * E - 2.0 * (double(m) * m - 4.0 * double(m) * n + double(n) * n) * w * w) * t -
                    3.0 * Ar);
        case 4: {
            const double w2 = w * w;
            const double w4 = w2 * w2;
            const double cubic = (double(m) * m * m - 3.0 * double(m) * m * n -
                                  double(m) * n * n + double(n) * n * n);
            return E * E * t + 8.0 * E * n * w2 * (n + 2.0 * m) * t -
                   8.0 * n * cubic * w4 * t -
                   Ar * (2.0 * E + 4.0 * (m + n) * (m + 2.0 * n) * w2 -
                         (p.A / p.a) * sreg);
        }
        default:
            throw std::invalid_argument("matrix_entry: power must be in 0..4");
    }
}

ConstraintMatrix build_matrix(int power, int K, double E, const LatticeParams& p,
                              Regularization reg, Rho0Source source) {
    if (power < 0 || power > 4)
        throw std::invalid_argument("build_matrix: power must be in 0..4");
    if (K < 1) throw std::invalid_argument("build_matrix: K must be >= 1");

    const double rho0 = source == Rho0Source::analytic ? rho0_analytic(E, p)
                                                       : rho0_finite_k(E, p, K);
    const double sreg = reg == Regularization::finite_k ? 2.0 * K + 1.0 : 0.0;
    const int base = power % 2 == 1 ? 1 : 0;
    const int order = K + 1 - base;

    ConstraintMatrix cm;
    cm.power = power;
    cm.K = K;
    cm.index_base = base;
    cm.E = E;
    cm.params = p;
    cm.reg = reg;
    cm.rho0 = rho0;
    cm.entries.resize(order, order);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = matrix_entry(power, i + base, j + base, E, p, rho0, sreg);
            cm.entries(i, j) = v;
            cm.entries(j, i) = v;
        }
    }
    return cm;
}

PsdResult is_psd(const Eigen::MatrixXd& M, double tol) {
    Eigen::MatrixXd S = 0.5 * (M + M.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("is_psd: eigenvalue solver failed");
    const double lam = solver.eigenvalues()(0);
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    return {lam >= -tol * scale, lam};
}

}  // namespace comb
