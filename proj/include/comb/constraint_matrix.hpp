#pragma once

#include <Eigen/Dense>

#include "comb/moments.hpp"

namespace comb {

// Bootstrap constraint matrix M_{nm} = <t_{-m} p^power t_n> at fixed power.
// Even powers index n, m = 0..K (order K+1). Odd powers drop index 0
// (order K): the n = 0 row has a vanishing diagonal entry <t_0 p^odd t_0> = 0
// next to nonzero off-diagonal entries, which rejects every energy outright.
struct ConstraintMatrix {
    int power = 0;
    int K = 0;
    int index_base = 0;  // first operator index (0 for even powers, 1 for odd)
    double E = 0.0;
    LatticeParams params;
    Regularization reg = Regularization::finite_k;
    double rho0 = 0.0;
    Eigen::MatrixXd entries;

    int order() const { return static_cast<int>(entries.rows()); }
};

/// Single entry <t_{-m} p^power t_n> from the closed forms; sreg is the
/// value assigned to the divergent sum in the power-4 bracket.
double matrix_entry(int power, int n, int m, double E, const LatticeParams& p,
                    double rho0, double sreg);

/// Assemble the order-(K+1) (even power) or order-K (odd power) matrix.
/// Entries are evaluated once per unordered index pair and mirrored, so the
/// result is symmetric by construction.
ConstraintMatrix build_matrix(int power, int K, double E, const LatticeParams& p,
                              Regularization reg = Regularization::finite_k,
                              Rho0Source source = Rho0Source::analytic);

struct PsdResult {
    bool psd = false;
    double min_eig = 0.0;
};

/// Positive-semidefiniteness test: symmetrize defensively, eigendecompose,
/// flag = lambda_min >= -tol * max(1, max|M_ij|). Returns lambda_min.
PsdResult is_psd(const Eigen::MatrixXd& M, double tol = 1e-9);
inline PsdResult is_psd(const ConstraintMatrix& M, double tol = 1e-9) {
    return is_psd(M.entries, tol);
}

}  // namespace comb
