"""Quasi-Monte Carlo copula toolkit.

Low-discrepancy point sets (Sobol, Halton, generalized Halton) with
randomization, copula sampling via the conditional distribution method and
stochastic representations, discrepancy measures, and an RQMC experiment
harness. The heavy lifting lives in the compiled `_core` extension.
"""

from ._core import (  # noqa: F401
    Copula,
    NumericalError,
    cdm_sample,
    clayton,
    cond_cdf,
    cond_quantile,
    copula_cdf,
    fit_alpha,
    gamma_quantile,
    gauss,
    gauss_corr,
    generate,
    gumbel,
    kendall_tau,
    kendall_tau_maps,
    l2_star_copula,
    l2_star_copula_mixture,
    l2_star_uniform,
    marshall_olkin,
    mixture,
    normal_cdf,
    normal_quantile,
    radical_inverse,
    randomized_replicates,
    rosenblatt,
    run_experiment_json,
    sample,
    sampler_input_dim,
    scrambled_radical_inverse,
    star_copula_grid,
    star_discrepancy_exact,
    student_t,
    student_t_corr,
    t_cdf,
    t_quantile,
)

__version__ = "0.1.0"
