"""Scalar special functions and the three-regime entropy-number rate.

Everything that involves Gamma functions or ball volumes is computed in the
log domain: Γ(1+n/p) overflows double precision already near n ≈ 170 for
p = 1, while log-volumes stay perfectly tame up to n in the millions.

Exponents p, q live in (0, ∞]; ∞ is represented exactly by ``math.inf``
with the conventions 1/∞ = 0 and Γ(1 + 1/∞) = Γ(1) = 1.
"""

from __future__ import annotations

import enum
import math

__all__ = [
    "RateRegime",
    "gamma_growth_ratio",
    "inv_exponent",
    "log_binomial",
    "log_gamma",
    "log_volume_lp_ball",
    "p_bar",
    "theoretical_rate",
]

LN2 = math.log(2.0)
_HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos rational approximation, g = 7, 9 coefficients.  Gives full double
# precision for the Gamma function on the positive half line.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _validate_exponent(p: float, name: str = "p") -> float:
    if not (p > 0.0):
        raise ValueError(f"{name} must be a positive exponent or inf, got {p!r}")
    return float(p)


def inv_exponent(p: float) -> float:
    """1/p with the convention 1/inf = 0."""
    _validate_exponent(p)
    return 0.0 if math.isinf(p) else 1.0 / p


def p_bar(p: float) -> float:
    """min(1, p): the exponent making l_p a p-normed space."""
    _validate_exponent(p)
    return min(1.0, p)


def log_gamma(t: float) -> float:
    """Natural log of the Gamma function for real t > 0.

    Lanczos approximation; arguments below 1/2 are lifted through the
    recurrence Gamma(1+t) = t*Gamma(t) rather than by reflection, since the
    domain is the positive half line only.
    """
    t = float(t)
    if math.isnan(t) or math.isinf(t) or t <= 0.0:
        raise ValueError(f"log_gamma requires finite t > 0, got {t!r}")
    if t < 0.5:
        return _log_gamma_lanczos(t + 1.0) - math.log(t)
    return _log_gamma_lanczos(t)


def _log_gamma_lanczos(t: float) -> float:
    # t >= 0.5 here
    z = t - 1.0
    series = _LANCZOS_COEF[0]
    for i in range(1, 9):
        series += _LANCZOS_COEF[i] / (z + i)
    base = z + _LANCZOS_G + 0.5
    return _HALF_LN_2PI + (z + 0.5) * math.log(base) - base + math.log(series)


def log_binomial(n: int, m: int) -> float:
    """ln C(n, m) via log-Gamma differences; exact to ~1e-13 relative."""
    if n != int(n) or m != int(m):
        raise ValueError("log_binomial requires integer arguments")
    n, m = int(n), int(m)
    if m < 0 or n < 0 or m > n:
        raise ValueError(f"log_binomial requires 0 <= m <= n, got n={n}, m={m}")
    if m == 0 or m == n:
        return 0.0
    return log_gamma(n + 1.0) - log_gamma(m + 1.0) - log_gamma(n - m + 1.0)


def log_volume_lp_ball(n: int, p: float) -> float:
    """ln of the Lebesgue volume of the unit ball of l_p^n.

    Closed form: vol = 2^n * Gamma(1+1/p)^n / Gamma(1+n/p), which for
    p = inf degenerates to the cube volume 2^n.
    """
    if n != int(n) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    n = int(n)
    _validate_exponent(p)
    if math.isinf(p):
        return n * LN2
    return n * LN2 + n * log_gamma(1.0 + 1.0 / p) - log_gamma(1.0 + n / p)


def gamma_growth_ratio(x: float, p: float) -> float:
    """Gamma(1+x/p)^(1/x) / x^(1/p), evaluated in the log domain.

    Stays bounded away from 0 and inf on x >= 1 for every fixed finite p;
    the large-x limit is (p*e)^(-1/p).
    """
    x = float(x)
    if not (x >= 1.0) or math.isinf(x):
        raise ValueError(f"gamma_growth_ratio requires finite x >= 1, got {x!r}")
    _validate_exponent(p)
    if math.isinf(p):
        raise ValueError("gamma_growth_ratio requires a finite exponent p")
    return math.exp(log_gamma(1.0 + x / p) / x - math.log(x) / p)


class RateRegime(enum.Enum):
    """Which piece of the three-regime rate formula governs a (k, n, p, q) cell."""

    SMALL_K = "small_k"
    MIDDLE_K = "middle_k"
    LARGE_K = "large_k"
    Q_LE_P = "q_le_p"

    def __str__(self) -> str:  # CLI prints the bare tag
        return self.value


def theoretical_rate(k: int, n: int, p: float, q: float) -> tuple[float, RateRegime]:
    """Constant-free rate for e_k(id: l_p^n -> l_q^n) and its regime tag.

    For q <= p the rate is 2^{-(k-1)/n} * n^{1/q-1/p} for every k.  For
    p < q it is 1 up to k = log2(n), then (log2(1+n/k)/k)^{1/p-1/q} up to
    k = n, then the 2^{-(k-1)/n} tail.  Ties at the regime boundaries go to
    the smaller-k regime.  Equivalence constants are deliberately not
    included; they are measured empirically by the bounds layer.
    """
    if k != int(k) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if n != int(n) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    k, n = int(k), int(n)
    _validate_exponent(p)
    _validate_exponent(q, "q")
    ip, iq = inv_exponent(p), inv_exponent(q)

    if q <= p:
        value = math.exp(-(k - 1) / n * LN2 + (iq - ip) * math.log(n))
        return value, RateRegime.Q_LE_P
    if k <= math.log2(n):
        return 1.0, RateRegime.SMALL_K
    if k <= n:
        value = (math.log2(1.0 + n / k) / k) ** (ip - iq)
        return value, RateRegime.MIDDLE_K
    value = math.exp(-(k - 1) / n * LN2 + (iq - ip) * math.log(n))
    return value, RateRegime.LARGE_K
