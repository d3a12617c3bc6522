"""Generalised Andrasfai graphs and their blow-ups.

Vertex ``v_i`` of the usual 1-based presentation is vertex ``i - 1`` here.
This is the only place that offset is applied.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph


def andrasfai_order(k: int, d: int) -> int:
    """Number of vertices of F^k_d, ``(2k-1)(d-1) + 2``."""
    return (2 * k - 1) * (d - 1) + 2


def generalized_andrasfai(k: int, d: int) -> Graph:
    """F^k_d: ``v_i ~ v_j`` iff ``(k-1)(d-1)+1 <= |i-j| <= k(d-1)+1``.

    ``k = 2`` gives the Andrasfai graph F_d; ``d = 2`` gives C_{2k+1}.
    """
    if k < 2 or d < 1:
        raise ValueError(f"need k >= 2 and d >= 1, got k={k}, d={d}")
    m = andrasfai_order(k, d)
    lo, hi = (k - 1) * (d - 1) + 1, k * (d - 1) + 1
    return Graph.from_edges(
        m, [(i, j) for i in range(m) for j in range(i + 1, m) if lo <= j - i <= hi]
    )


def andrasfai(d: int) -> Graph:
    """The Andrasfai graph F_d on ``3d - 1`` vertices."""
    return generalized_andrasfai(2, d)


def andrasfai_parameters(g: Graph, k: int) -> int | None:
    """Return ``d`` if ``g`` is exactly F^k_d as constructed here, else ``None``."""
    if k < 2 or g.n < 2 or (g.n - 2) % (2 * k - 1):
        return None
    d = (g.n - 2) // (2 * k - 1) + 1
    return d if g == generalized_andrasfai(k, d) else None


@dataclass(frozen=True)
class BlowUp:
    """A blow-up of ``base``: class ``i`` holds ``multiplicities[i]`` independent copies.

    Result vertices are class-contiguous in base order; ``class_of[x]`` is the
    base vertex of ``x``.
    """

    base: Graph
    multiplicities: tuple[int, ...]
    result: Graph
    class_of: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.result.n

    @property
    def balanced(self) -> bool:
        return len(set(self.multiplicities)) <= 1

    def members(self, i: int) -> range:
        start = sum(self.multiplicities[:i])
        return range(start, start + self.multiplicities[i])


def blow_up(base: Graph, multiplicities: Sequence[int] | int) -> BlowUp:
    """Replace base vertex ``i`` by an independent class of size ``multiplicities[i]``.

    An int gives the balanced blow-up.  Zero multiplicities are allowed and
    simply drop that class.
    """
    if isinstance(multiplicities, int):
        multiplicities = [multiplicities] * base.n
    mult = tuple(int(t) for t in multiplicities)
    if len(mult) != base.n:
        raise ValueError(f"expected {base.n} multiplicities, got {len(mult)}")
    if any(t < 0 for t in mult):
        raise ValueError("multiplicities must be nonnegative")
    class_of = tuple(i for i, t in enumerate(mult) for _ in range(t))
    n = len(class_of)
    edges = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if base.has_edge(class_of[x], class_of[y])
    ]
    return BlowUp(base, mult, Graph.from_edges(n, edges), class_of)


def random_multiplicities(
    m: int,
    rng: random.Random,
    total: int | None = None,
    max_t: int = 4,
) -> list[int]:
    """Random class sizes for an ``m``-vertex base.

    With ``total`` given, ``total`` vertices are thrown uniformly into the
    ``m`` classes; otherwise each size is uniform in ``0..max_t`` (resampled
    until nonzero overall).
    """
    if total is not None:
        mult = [0] * m
        for _ in range(total):
            mult[rng.randrange(m)] += 1
        return mult
    while True:
        mult = [rng.randint(0, max_t) for _ in range(m)]
        if sum(mult):
            return mult


def divisible_multiplicities(
    m: int, divisor: int, rng: random.Random, n_max: int
) -> list[int]:
    """Random class sizes whose total is a positive multiple of ``divisor`` up to ``n_max``."""
    if divisor > n_max:
        raise ValueError("n_max must be at least the divisor")
    total = divisor * rng.randint(1, n_max // divisor)
    return random_multiplicities(m, rng, total=total)
