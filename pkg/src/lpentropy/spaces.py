"""Finite-dimensional l_p spaces: quasi-norms, embeddings, sparse truncation.

Vectors are plain 1-d numpy arrays (real dtype); complex vectors are 1-d
complex arrays.  All operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special_math import inv_exponent, p_bar

__all__ = [
    "SpaceDescriptor",
    "best_m_term",
    "deinterleave",
    "identity_op_norm",
    "interleave",
    "interleave_distortion",
    "lp_dist",
    "lp_norm",
]


@dataclass(frozen=True)
class SpaceDescriptor:
    """Dimension n and exponent p of l_p^n, with the derived p_bar = min(1,p)."""

    n: int
    p: float

    def __post_init__(self) -> None:
        if self.n != int(self.n) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if not (self.p > 0.0):
            raise ValueError(f"exponent must lie in (0, inf], got {self.p!r}")
        object.__setattr__(self, "p", float(self.p))

    @property
    def p_bar(self) -> float:
        return p_bar(self.p)


def lp_norm(x: np.ndarray, p: float) -> float:
    """(Sum |x_i|^p)^(1/p), a quasi-norm for p < 1; max |x_i| for p = inf.

    Complex entries contribute their modulus.
    """
    if not (p > 0.0):
        raise ValueError(f"exponent must lie in (0, inf], got {p!r}")
    a = np.abs(np.asarray(x, dtype=complex if np.iscomplexobj(x) else float))
    if a.size == 0:
        return 0.0
    if math.isinf(p):
        return float(a.max())
    return float((a**p).sum() ** (1.0 / p))


def lp_dist(a: np.ndarray, b: np.ndarray, q: float) -> np.ndarray:
    """Pairwise l_q distances between the rows of a (r, n) and b (s, n) array.

    Returns an (r, s) matrix.  Caller is responsible for chunking when
    r * s * n gets large.
    """
    if not (q > 0.0):
        raise ValueError(f"exponent must lie in (0, inf], got {q!r}")
    diff = np.abs(a[:, None, :] - b[None, :, :])
    if math.isinf(q):
        return diff.max(axis=2)
    return (diff**q).sum(axis=2) ** (1.0 / q)


def identity_op_norm(n: int, p: float, q: float) -> float:
    """Operator norm of the identity l_p^n -> l_q^n: max(1, n^{1/q-1/p})."""
    if n != int(n) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return max(1.0, float(n) ** (inv_exponent(q) - inv_exponent(p)))


def best_m_term(x: np.ndarray, m: int) -> np.ndarray:
    """Keep the m entries of largest modulus, zero the rest.

    Ties are broken toward the smaller index.  For ||x||_p <= 1 the result
    satisfies ||x - best_m_term(x, m)||_inf <= m^(-1/p).
    """
    x = np.asarray(x, dtype=float)
    if m != int(m) or m < 0 or m > x.size:
        raise ValueError(f"m must satisfy 0 <= m <= len(x), got {m!r}")
    m = int(m)
    out = np.zeros_like(x)
    if m == 0:
        return out
    # stable sort on -|x| keeps the smaller index first among ties
    order = np.argsort(-np.abs(x), kind="stable")[:m]
    out[order] = x[order]
    return out


def interleave(z: np.ndarray) -> np.ndarray:
    """(z_1, ..., z_n) -> (Re z_1, Im z_1, ..., Re z_n, Im z_n)."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(2 * z.size, dtype=float)
    out[0::2] = z.real
    out[1::2] = z.imag
    return out


def deinterleave(x: np.ndarray) -> np.ndarray:
    """Inverse of :func:`interleave`; requires even length."""
    x = np.asarray(x, dtype=float)
    if x.size % 2 != 0:
        raise ValueError(f"deinterleave requires even length, got {x.size}")
    return x[0::2] + 1j * x[1::2]


def interleave_distortion(p: float) -> tuple[float, float]:
    """Bracket for ||interleave(z)||_p / ||z||_p over nonzero complex z.

    Per coordinate, |a|^p + |b|^p compares to (a^2+b^2)^{p/2} within the
    factor 2^{1-p/2}, which yields the bracket below after taking p-th roots;
    it degrades to [2^{-1/2}, 1] as p -> inf and is independent of n.
    """
    factor = 2.0 ** (inv_exponent(p) - 0.5)
    return min(1.0, factor), max(1.0, factor)
