"""Explicit witnesses: separated point sets, ternary codes, covering nets.

A packing (pairwise l_q distance > separation inside a ball) certifies a
lower bound on entropy numbers; a covering net certifies an upper bound.
Constructions are greedy over fixed deterministic enumerations so that
identical seeds reproduce byte-identical witnesses, and budgets refuse
rather than silently degrade a proof-backed cardinality guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import _kernels
from .spaces import SpaceDescriptor, lp_dist, lp_norm
from .special_math import inv_exponent, p_bar

__all__ = [
    "BudgetError",
    "CoveringWitness",
    "DEFAULT_BUDGET",
    "GridSource",
    "PackingWitness",
    "RandomSource",
    "SupportSystem",
    "TernaryCode",
    "canonical_packing",
    "code_packing",
    "cube_grid_cover",
    "greedy_maximal_packing",
    "hamming_code",
    "indicator_packing",
    "interpolation_cover",
    "packing_to_cover",
    "sample_ball",
    "self_cover_net",
    "sparse_support_cover",
    "support_system",
]

DEFAULT_BUDGET = 10**7

# a grid-derived cover counts as proven when the grid pitch is at most this
# fraction of the covering radius (coverage then holds up to grid resolution)
GRID_PROVEN_SLACK = 0.5

MEMBERSHIP_TOL = 1e-9
SEPARATION_TOL = 1e-9


class BudgetError(RuntimeError):
    """A construction refused to run because its cardinality/enumeration
    budget would be exceeded (the guarantee would be lost, so no fallback)."""


# ---------------------------------------------------------------------------
# candidate sources


@dataclass(frozen=True)
class GridSource:
    """Exhaustive axis grid over [-1,1]^n with the given pitch per axis."""

    step: float = 2.0 / 32.0


@dataclass(frozen=True)
class RandomSource:
    """Uniform i.i.d. samples from the host ball."""

    count: int = 4096


def sample_ball(space: SpaceDescriptor, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples from the unit ball of l_p^n, one per row.

    For finite p: coordinates with density proportional to exp(-|t|^p),
    normalized to the sphere, then scaled by U^(1/n); this is exact for the
    uniform measure on the ball.  For p = inf, coordinates are i.i.d.
    uniform on [-1, 1].
    """
    n, p = space.n, space.p
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return np.zeros((0, n))
    if math.isinf(p):
        return rng.uniform(-1.0, 1.0, size=(count, n))
    g = rng.standard_gamma(1.0 / p, size=(count, n)) ** (1.0 / p)
    signs = rng.integers(0, 2, size=(count, n)) * 2 - 1
    g *= signs
    norms = (np.abs(g) ** p).sum(axis=1) ** (1.0 / p)
    norms[norms == 0.0] = 1.0
    radii = rng.random(count) ** (1.0 / n)
    return g * (radii / norms)[:, None]


def grid_candidates(space: SpaceDescriptor, step: float) -> np.ndarray:
    """Lexicographically ordered grid points of [-1,1]^n inside the ball.

    Exhaustive enumeration only scales to tiny dimension; refuses above n=4.
    """
    if space.n > 4:
        raise BudgetError(f"exhaustive grid limited to n <= 4, got n={space.n}")
    if not (0.0 < step <= 2.0):
        raise ValueError(f"grid step must lie in (0, 2], got {step!r}")
    per_axis = int(round(2.0 / step)) + 1
    axis = np.linspace(-1.0, 1.0, per_axis)
    mesh = np.meshgrid(*([axis] * space.n), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    if math.isinf(space.p):
        return pts
    keep = (np.abs(pts) ** space.p).sum(axis=1) <= 1.0 + 1e-12
    return pts[keep]


# ---------------------------------------------------------------------------
# witness types


@dataclass
class PackingWitness:
    """Points of a ball with pairwise l_q distance exceeding `separation`."""

    points: np.ndarray  # (N, n)
    host: SpaceDescriptor
    metric_q: float
    separation: float
    provenance: str
    seed: int = 0
    grid_step: float | None = None  # set when candidates were an exhaustive grid

    @property
    def card(self) -> int:
        return self.points.shape[0]

    def validate(self) -> "PackingWitness":
        """Exhaustively re-check membership and pairwise separations."""
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.host.n:
            raise ValueError("points shape does not match host dimension")
        for row in pts:
            if lp_norm(row, self.host.p) > 1.0 + MEMBERSHIP_TOL:
                raise ValueError("packing point escapes the host ball")
        if self.separation <= 0.0:
            raise ValueError("separation must be positive")
        n_pts = pts.shape[0]
        chunk = max(1, int(2e6 // max(1, n_pts * self.host.n)))
        for lo in range(0, n_pts, chunk):
            d = lp_dist(pts[lo : lo + chunk], pts, self.metric_q)
            for i in range(d.shape[0]):
                d[i, lo + i] = np.inf
            if d.min() <= self.separation - SEPARATION_TOL:
                raise ValueError("pair closer than the claimed separation")
        return self


@dataclass
class CoveringWitness:
    """Centers whose radius-`radius` l_q balls cover the target ball.

    ``verified`` is `proven` only when the construction's mathematics
    guarantees coverage, `sampled` when coverage was checked on a finite
    point cloud, `unverified` otherwise.
    """

    centers: np.ndarray  # (N, n)
    radius: float
    target: SpaceDescriptor
    metric_q: float
    verified: str = "unverified"
    confidence: float | None = None
    provenance: str = ""
    seed: int = 0

    def __post_init__(self) -> None:
        if self.centers.ndim != 2 or self.centers.shape[0] < 1:
            raise ValueError("a covering needs at least one center")
        if not (self.radius > 0.0):
            raise ValueError("covering radius must be positive")
        if self.verified not in ("proven", "sampled", "unverified"):
            raise ValueError(f"bad verification status {self.verified!r}")

    @property
    def card(self) -> int:
        return self.centers.shape[0]


@dataclass
class TernaryCode:
    """Words over {-1,0,1}^n with exactly 2m nonzeros and pairwise Hamming
    distance greater than m."""

    words: np.ndarray  # (N, n) int8
    m: int
    provenance: str = ""

    @property
    def card(self) -> int:
        return self.words.shape[0]

    @property
    def n(self) -> int:
        return self.words.shape[1]

    def validate(self) -> "TernaryCode":
        """Definition re-check; quadratic, intended for small codes."""
        w = self.words
        if not np.isin(w, (-1, 0, 1)).all():
            raise ValueError("code entries must lie in {-1,0,1}")
        if (np.count_nonzero(w, axis=1) != 2 * self.m).any():
            raise ValueError("every word must have exactly 2m nonzero entries")
        if not self.min_distance_exceeds(self.m):
            raise ValueError("pair at Hamming distance <= m")
        return self

    def min_distance_exceeds(self, m: int) -> bool:
        """Exact check that all pairwise Hamming distances exceed m.

        Two weight-2m words at distance <= m share all but at most
        floor(m/2) support elements, so only pairs found under a shared
        (2m - floor(m/2))-subset of their supports need explicit distance
        evaluation; everything else is separated by support difference alone.
        """
        w = self.words
        n_words = w.shape[0]
        if n_words <= 1:
            return True
        weight = 2 * self.m
        ov_min = weight - self.m // 2  # |S cap T| >= ov_min iff distance can be <= m
        supports = [tuple(np.flatnonzero(row)) for row in w]
        buckets: dict[tuple[int, ...], list[int]] = {}
        for i, sup in enumerate(supports):
            for sub in combinations(sup, ov_min):
                buckets.setdefault(sub, []).append(i)
        seen: set[tuple[int, int]] = set()
        for idx in buckets.values():
            for a in range(len(idx)):
                for b in range(a + 1, len(idx)):
                    pair = (idx[a], idx[b])
                    if pair in seen:
                        continue
                    seen.add(pair)
                    if int(np.count_nonzero(w[pair[0]] != w[pair[1]])) <= m:
                        return False
        return True


@dataclass
class SupportSystem:
    """k-element subsets of {0..n-1} with pairwise intersections below k/2."""

    sets: np.ndarray  # (N, k) int64, rows sorted ascending
    k: int
    n: int
    provenance: str = ""

    @property
    def card(self) -> int:
        return self.sets.shape[0]

    def validate(self) -> "SupportSystem":
        s = self.sets
        if s.ndim != 2 or s.shape[1] != self.k:
            raise ValueError("rows must have exactly k elements")
        if (np.diff(s, axis=1) <= 0).any():
            raise ValueError("rows must be strictly increasing")
        if s.size and (s.min() < 0 or s.max() >= self.n):
            raise ValueError("elements out of range")
        for i in range(s.shape[0]):
            row = set(s[i].tolist())
            for j in range(i + 1, s.shape[0]):
                if len(row.intersection(s[j].tolist())) >= self.k / 2.0:
                    raise ValueError("intersection of size >= k/2")
        return self


# ---------------------------------------------------------------------------
# greedy packings and derived covers


def greedy_maximal_packing(
    host: SpaceDescriptor,
    metric_q: float,
    tau: float,
    candidates: GridSource | RandomSource = GridSource(),
    seed: int = 0,
) -> PackingWitness:
    """Greedy maximal tau-separated subset of the host ball in the l_q metric.

    Candidates are scanned in a fixed order (grid lexicographic, or the
    seeded sample order); a candidate is accepted iff its distance to every
    previously accepted point exceeds tau.  The result is maximal with
    respect to the candidate set, which for an exhaustive grid approximates
    maximality in the full ball up to the grid pitch.
    """
    if not (tau > 0.0):
        raise ValueError(f"tau must be positive, got {tau!r}")
    if not (metric_q > 0.0):
        raise ValueError(f"metric exponent must lie in (0, inf], got {metric_q!r}")
    if isinstance(candidates, GridSource):
        cand = grid_candidates(host, candidates.step)
        provenance = f"greedy-grid(step={candidates.step:g},tau={tau:g})"
        grid_step = candidates.step
    elif isinstance(candidates, RandomSource):
        cand = sample_ball(host, candidates.count, np.random.default_rng(seed))
        provenance = f"greedy-random(count={candidates.count},tau={tau:g},seed={seed})"
        grid_step = None
    else:
        raise ValueError(f"unknown candidate source {candidates!r}")
    if cand.shape[0] == 0:
        raise ValueError("empty candidate set")

    accepted = np.empty_like(cand)
    n_acc = 0
    for row in cand:
        if n_acc == 0:
            accepted[0] = row
            n_acc = 1
            continue
        d = lp_dist(row[None, :], accepted[:n_acc], metric_q)
        if float(d.min()) > tau:
            accepted[n_acc] = row
            n_acc += 1
    return PackingWitness(
        points=accepted[:n_acc].copy(),
        host=host,
        metric_q=metric_q,
        separation=tau,
        provenance=provenance,
        seed=seed,
        grid_step=grid_step,
    )


def packing_to_cover(packing: PackingWitness) -> CoveringWitness:
    """Reinterpret a maximal packing as a cover of the same radius.

    Maximality means every candidate point sits within `separation` of an
    accepted point.  Exhaustive-grid candidates with pitch well below the
    radius make the cover proven (up to grid resolution); random candidates
    make it a sample-checked cover, with the candidate count as evidence.
    """
    if packing.grid_step is not None and packing.grid_step <= packing.separation * GRID_PROVEN_SLACK:
        verified, confidence = "proven", None
    else:
        verified, confidence = "sampled", 1.0 - 1.0 / max(2, packing.card)
    return CoveringWitness(
        centers=packing.points.copy(),
        radius=packing.separation,
        target=packing.host,
        metric_q=packing.metric_q,
        verified=verified,
        confidence=confidence,
        provenance=f"packing-to-cover[{packing.provenance}]",
        seed=packing.seed,
    )


def canonical_packing(n: int, q: float, host_p: float = 1.0) -> PackingWitness:
    """The canonical unit vectors as a 2^{1/q}-separated packing.

    Unit vectors lie in every l_p ball, so the host exponent is a label
    rather than a constraint; distinct e_i, e_j differ in two coordinates,
    giving l_q distance exactly 2^{1/q} (1 for q = inf).
    """
    if n != int(n) or n < 2:
        raise ValueError(f"canonical packing needs n >= 2, got {n!r}")
    n = int(n)
    sep = 2.0 ** inv_exponent(q)
    return PackingWitness(
        points=np.eye(n),
        host=SpaceDescriptor(n, host_p),
        metric_q=q,
        separation=sep,
        provenance="canonical-unit-vectors",
    )


def self_cover_tau(space: SpaceDescriptor, k: int) -> float:
    """Separation making a maximal packing of B_p in its own metric a cover
    by at most 2^(k-1) balls: tau with (1 + tau^pb/2) / (tau^pb/2) = 2^((k-1)pb/n)."""
    if k != int(k) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    pb = space.p_bar
    growth = 2.0 ** ((k - 1) * pb / space.n) - 1.0
    if growth <= 0.0:
        raise ValueError("self-cover separation undefined for k = 1")
    return (2.0 / growth) ** (1.0 / pb)


def self_cover_net(
    space: SpaceDescriptor,
    k: int,
    candidates: GridSource | RandomSource = GridSource(),
    seed: int = 0,
) -> CoveringWitness:
    """Cover of B_p^n by at most 2^(k-1) balls of B_p^n via a maximal packing.

    The volume comparison behind :func:`self_cover_tau` caps the cardinality
    of any tau-separated set at 2^(k-1), so the greedy result respects the
    budget by construction.
    """
    if k == 1:
        return CoveringWitness(
            centers=np.zeros((1, space.n)),
            radius=1.0,
            target=space,
            metric_q=space.p,
            verified="proven",
            provenance="self-cover(k=1,origin)",
            seed=seed,
        )
    tau = self_cover_tau(space, k)
    packing = greedy_maximal_packing(space, space.p, tau, candidates, seed)
    cover = packing_to_cover(packing)
    cover.provenance = f"self-cover(k={k})[{packing.provenance}]"
    return cover


# ---------------------------------------------------------------------------
# separated ternary codes


@lru_cache(maxsize=None)
def _sign_kill_tables(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Kill bitmasks over the 2^(2m) sign patterns of one support.

    table0[sigma]: patterns within Hamming distance m of sigma (same support).
    table1[bi, tau]: patterns s in a single-swap support, where position bi
    holds the swapped-in element, with drop(s, bi) within distance m-2 of tau.
    """
    w = 2 * m
    nsig = 1 << w
    sigs = np.arange(nsig, dtype=np.uint64)

    def fold(indices: np.ndarray) -> np.uint64:
        if indices.size == 0:
            return np.uint64(0)
        return np.bitwise_or.reduce(np.uint64(1) << indices.astype(np.uint64))

    table0 = np.zeros(nsig, np.uint64)
    for sigma in range(nsig):
        close = np.flatnonzero(np.bitwise_count(sigs ^ np.uint64(sigma)) <= m)
        table0[sigma] = fold(close)

    table1 = np.zeros((w, max(1, nsig // 2)), np.uint64)
    if m >= 2:
        for bi in range(w):
            low = sigs & np.uint64((1 << bi) - 1)
            high = (sigs >> np.uint64(bi + 1)) << np.uint64(bi)
            dropped = low | high
            for tau in range(nsig // 2):
                close = np.flatnonzero(
                    np.bitwise_count(dropped ^ np.uint64(tau)) <= m - 2
                )
                table1[bi, tau] = fold(close)
    return table0, table1


def _binom_table(n: int, w: int) -> np.ndarray:
    table = np.zeros((n + 1, w + 1), np.int64)
    table[:, 0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, w) + 1):
            table[i, j] = table[i - 1, j - 1] + table[i - 1, j]
    return table


def _words_from_pairs(
    supports: np.ndarray, sup_idx: np.ndarray, sig: np.ndarray, n: int
) -> np.ndarray:
    n_words = sup_idx.shape[0]
    w = supports.shape[1]
    words = np.zeros((n_words, n), np.int8)
    cols = supports[sup_idx]  # (N, w)
    signs = np.where((sig[:, None] >> np.arange(w)[None, :]) & 1 == 1, -1, 1).astype(np.int8)
    words[np.arange(n_words)[:, None], cols] = signs
    return words


def hamming_code(n: int, m: int, budget: int = DEFAULT_BUDGET) -> TernaryCode:
    """Greedy maximal set of weight-2m ternary words at Hamming distance > m.

    Scans the full shell H_m in a fixed order (supports lexicographic, signs
    in binary order); greedy-to-saturation yields a maximal set, whose
    cardinality is therefore at least (n/(2m))^m by the counting argument.
    Refuses when |H_m| = C(n,2m) * 4^m exceeds the budget: a partial scan
    would lose the cardinality guarantee.
    """
    if n != int(n) or m != int(m) or n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")
    n, m = int(n), int(m)
    if m > n / 4.0:
        raise ValueError(f"weight parameter must satisfy m <= n/4, got n={n}, m={m}")
    w = 2 * m
    n_sup = math.comb(n, w)
    shell = n_sup * (1 << w)
    if shell > budget:
        raise BudgetError(
            f"shell size C({n},{w})*4^{m} = {shell} exceeds budget {budget}"
        )
    if m <= 3:
        supports = _kernels.combos_lex(n, w, n_sup)
        table0, table1 = _sign_kill_tables(m)
        nsig = 1 << w
        full = np.uint64(0xFFFFFFFFFFFFFFFF) if nsig == 64 else np.uint64((1 << nsig) - 1)
        amax = {1: 2, 2: 2, 3: 4}[m]  # max sign patterns one support can hold
        sup_idx, sig = _kernels.greedy_code_supports(
            supports, n, m, _binom_table(n, w), table0, table1, full, amax
        )
    else:
        if n > 64:
            raise BudgetError("mask-encoded scan requires n <= 64 for m >= 4")
        P = np.empty(shell, np.uint64)
        Q = np.empty(shell, np.uint64)
        _kernels.enum_code_masks(n, m, n_sup, P, Q)
        acc = _kernels.greedy_code_masks(P, Q, m)
        supports = _kernels.combos_lex(n, w, n_sup)
        sup_idx = acc >> w
        sig = acc & ((1 << w) - 1)
    words = _words_from_pairs(supports, sup_idx, sig, n)
    return TernaryCode(words=words, m=m, provenance=f"greedy-hamming(n={n},m={m})")


def code_packing(code: TernaryCode, p: float, q: float) -> PackingWitness:
    """Scale a separated ternary code into B_p^n.

    Words scaled by (2m)^(-1/p) have unit l_p norm; any two differ in more
    than m coordinates, each by at least the scale factor, which certifies
    l_q separation 2^(-1/p) * m^(1/q - 1/p).
    """
    m = code.m
    scale = float(2 * m) ** (-inv_exponent(p))
    sep = 2.0 ** (-inv_exponent(p)) * float(m) ** (inv_exponent(q) - inv_exponent(p))
    return PackingWitness(
        points=code.words.astype(float) * scale,
        host=SpaceDescriptor(code.n, p),
        metric_q=q,
        separation=sep,
        provenance=f"code-packing[{code.provenance}]",
    )


# ---------------------------------------------------------------------------
# half-overlap support systems


def support_system(n: int, k: int, budget: int = DEFAULT_BUDGET) -> SupportSystem:
    """Greedy family of k-subsets of {0..n-1} with intersections below k/2.

    Greedy over the lexicographic enumeration of all C(n,k) subsets; the
    maximal result has at least (n/(4k))^(k/2) members whenever that bound
    is at least 1.
    """
    if n != int(n) or k != int(k) or n < 1 or k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n!r}, k={k!r}")
    n, k = int(n), int(k)
    total = math.comb(n, k)
    if total > budget:
        raise BudgetError(f"C({n},{k}) = {total} exceeds budget {budget}")
    thr = (k + 1) // 2  # kill iff |intersection| >= ceil(k/2)
    if n <= 64:
        masks = _kernels.combo_masks_lex(n, k, total)
        acc = _kernels.greedy_half_overlap_masks(masks, thr)
        rows = _kernels.combos_lex(n, k, total)[acc]
    else:
        rows_all = _kernels.combos_lex(n, k, total)
        acc = _kernels.greedy_half_overlap_rows(rows_all, thr)
        rows = rows_all[acc]
    return SupportSystem(sets=rows, k=k, n=n, provenance=f"greedy-halfoverlap(n={n},k={k})")


def indicator_packing(system: SupportSystem, p: float, q: float) -> PackingWitness:
    """Scaled indicator vectors of a half-overlap family as a packing.

    k^(-1/p) * chi_T has unit l_p norm; two sets intersecting below k/2
    differ on more than k coordinates, certifying separation k^(1/q-1/p).
    """
    k = system.k
    pts = np.zeros((system.card, system.n))
    pts[np.arange(system.card)[:, None], system.sets] = float(k) ** (-inv_exponent(p))
    sep = float(k) ** (inv_exponent(q) - inv_exponent(p))
    return PackingWitness(
        points=pts,
        host=SpaceDescriptor(system.n, p),
        metric_q=q,
        separation=sep,
        provenance=f"indicator-packing[{system.provenance}]",
    )


# ---------------------------------------------------------------------------
# structured covers


def cube_grid_cover(m: int, p: float, cells: int) -> CoveringWitness:
    """Axis-aligned grid of sup-balls covering B_p^m (via the cube) in l_inf.

    cells^m centers of radius 1/cells; proven, since every coordinate of a
    ball point lies within 1/cells of a cell midpoint.
    """
    if m != int(m) or m < 1 or cells != int(cells) or cells < 1:
        raise ValueError("m and cells must be positive integers")
    m, cells = int(m), int(cells)
    if cells**m > DEFAULT_BUDGET:
        raise BudgetError(f"{cells}^{m} grid centers exceed budget {DEFAULT_BUDGET}")
    axis = -1.0 + (2.0 * np.arange(cells) + 1.0) / cells
    mesh = np.meshgrid(*([axis] * m), indexing="ij")
    centers = np.stack([g.ravel() for g in mesh], axis=1)
    return CoveringWitness(
        centers=centers,
        radius=1.0 / cells,
        target=SpaceDescriptor(m, p),
        metric_q=math.inf,
        verified="proven",
        provenance=f"cube-grid(cells={cells})",
    )


def sparse_support_cover(
    n: int,
    m: int,
    inner: CoveringWitness,
    p: float,
    budget: int = DEFAULT_BUDGET,
) -> CoveringWitness:
    """Cover of B_p^n in l_inf from an l_inf cover of B_p^m on every support.

    Every ball point is within m^(-1/p) (sup norm) of its best m-term
    truncation, whose support fits one of the C(n,m) coordinate subsets;
    embedding every inner center on every support therefore covers the ball
    with radius m^(-1/p) + inner.radius.  Cardinality is exactly
    C(n,m) * card(inner).
    """
    if n != int(n) or m != int(m) or not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got n={n!r}, m={m!r}")
    n, m = int(n), int(m)
    if inner.target.n != m:
        raise ValueError("inner cover must live in dimension m")
    if not math.isinf(inner.metric_q):
        raise ValueError("inner cover must be an l_inf cover")
    if inner.target.p != p:
        raise ValueError("inner cover must cover the l_p ball being embedded")
    n_sup = math.comb(n, m)
    total = n_sup * inner.card
    if total > budget:
        raise BudgetError(f"C({n},{m}) * {inner.card} = {total} exceeds budget {budget}")
    supports = _kernels.combos_lex(n, m, n_sup)
    centers = np.zeros((total, n))
    sup_rep = np.repeat(supports, inner.card, axis=0)  # (total, m)
    vals = np.tile(inner.centers, (n_sup, 1))  # (total, m)
    centers[np.arange(total)[:, None], sup_rep] = vals
    radius = float(m) ** (-inv_exponent(p)) + inner.radius
    verified = "proven" if inner.verified == "proven" else "unverified"
    return CoveringWitness(
        centers=centers,
        radius=radius,
        target=SpaceDescriptor(n, p),
        metric_q=math.inf,
        verified=verified,
        provenance=f"sparse-support(m={m})x[{inner.provenance}]",
        seed=inner.seed,
    )


def interpolation_cover(
    cover_p: CoveringWitness,
    cover_inf: CoveringWitness,
    q: float,
    representatives: GridSource | RandomSource = RandomSource(),
    seed: int = 0,
) -> CoveringWitness:
    """Combine an l_p self-cover and an l_inf cover of B_p^n into an l_q cover.

    Each candidate point is assigned to the first ball covering it in each
    input (center order), partitioning the ball into intersection cells; one
    representative per nonempty cell is kept.  Any two points of a cell are
    within 2^{1/pb} * r_p of each other in l_p and 2 * r_inf in l_inf, so by
    norm interpolation within 2^{1/pb} * r_p^{p/q} * r_inf^{1-p/q} in l_q.
    Nonempty cells are only discovered up to the candidate cloud, hence the
    sampled status.
    """
    space = cover_p.target
    p = space.p
    if cover_inf.target.n != space.n:
        raise ValueError("input covers live in different dimensions")
    if cover_inf.target.p != p:
        raise ValueError("input covers must cover the same l_p ball")
    if cover_p.metric_q != p:
        raise ValueError("first input must be a cover in the l_p metric itself")
    if not math.isinf(cover_inf.metric_q):
        raise ValueError("second input must be an l_inf cover")
    if not (p < q < math.inf):
        raise ValueError(f"interpolation requires p < q < inf, got p={p}, q={q}")

    if isinstance(representatives, GridSource):
        cand = grid_candidates(space, representatives.step)
    elif isinstance(representatives, RandomSource):
        cand = sample_ball(space, representatives.count, np.random.default_rng(seed))
    else:
        raise ValueError(f"unknown candidate source {representatives!r}")

    def first_cover_index(points: np.ndarray, cover: CoveringWitness) -> np.ndarray:
        out = np.full(points.shape[0], -1, dtype=np.int64)
        limit = cover.radius * (1.0 + 1e-9)
        chunk = max(1, int(2e6 // max(1, cover.card * space.n)))
        for lo in range(0, points.shape[0], chunk):
            d = lp_dist(points[lo : lo + chunk], cover.centers, cover.metric_q)
            hit = d <= limit
            any_hit = hit.any(axis=1)
            out[lo : lo + chunk][any_hit] = np.argmax(hit[any_hit], axis=1)
        return out

    ii = first_cover_index(cand, cover_p)
    jj = first_cover_index(cand, cover_inf)
    ok = (ii >= 0) & (jj >= 0)
    cell = ii[ok] * cover_inf.card + jj[ok]
    pts = cand[ok]
    _, first = np.unique(cell, return_index=True)
    reps = pts[np.sort(first)]
    if reps.shape[0] == 0:
        raise ValueError("no candidate was covered by both inputs")
    pb = p_bar(p)
    exponent = p / q
    radius = 2.0 ** (1.0 / pb) * cover_p.radius**exponent * cover_inf.radius ** (1.0 - exponent)
    return CoveringWitness(
        centers=reps,
        radius=radius,
        target=space,
        metric_q=q,
        verified="sampled",
        confidence=1.0 - 1.0 / max(2, cand.shape[0]),
        provenance=f"interpolation[{cover_p.provenance} ; {cover_inf.provenance}]",
        seed=seed,
    )
