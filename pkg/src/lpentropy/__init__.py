"""Certified bounds on entropy numbers of lp-ball embeddings.

Layers, bottom up: ``special_math`` (log-Gamma, ball volumes, rate
formula), ``spaces`` (quasi-norms, sparse truncation, real/complex
interleaving), ``constructions`` (packings, codes, covering nets),
``bounds`` (certificate assembly, verification, oracles), ``cli``.
"""

from .special_math import (
    RateRegime,
    gamma_growth_ratio,
    log_binomial,
    log_gamma,
    log_volume_lp_ball,
    theoretical_rate,
)

__version__ = "0.1.0"
