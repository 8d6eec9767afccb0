"""Kronig-Penney bootstrap: moment matrices, PSD band scans, dispersion."""

from comb_bootstrap._core import (  # noqa: F401
    BandInterval,
    LatticeParams,
    MissingMomentError,
    NonConvergenceError,
    NumericError,
    PoleError,
    Regularization,
    Rho0Source,
    ScanConfig,
    __version__,
    build_matrix,
    cos_ka_series,
    cos_ka_series_adaptive,
    dispersion_curve,
    exact_band_edges,
    heisenberg_min_energy,
    is_psd,
    isw_density,
    isw_fourier_mode,
    isw_moment,
    isw_moment_closed,
    isw_quantization_residual,
    kp_dispersion_rhs,
    kp_isw_limit_check,
    min_allowed_energy,
    p_even_moment,
    rho0_analytic,
    rho0_finite_k,
    rho_x_analytic,
    scan,
    t_moment,
    tn_p_moment,
    x2_moment,
)
