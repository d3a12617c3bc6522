"""Circle representations of blow-ups of generalised Andrasfai graphs.

Vertices sit at distinct rational points of R/Z and ``{x, y}`` is an edge
exactly when the smaller angle between them exceeds ``(k-1)/(2k-1)`` of a
full turn.  Vertex counts of arcs are returned doubled so that half-weighted
endpoints stay integral.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .andrasfai import BlowUp, andrasfai_parameters
from .errors import PreconditionError
from .exact import (
    MODE_WEIGHT,
    CircularInterval,
    RationalLike,
    angle_fraction,
    arc,
    format_rational,
    point_weight,
    rational,
    wrap,
)
from .graphs import DEFAULT_CAP, Graph, independence_number, induced_edge_count


def threshold(k: int) -> Fraction:
    """``(k-1)/(2k-1)``: adjacency needs a strictly larger angle."""
    return Fraction(k - 1, 2 * k - 1)


def step(k: int) -> Fraction:
    """``1/(2k-1)``, the side of the regular (2k-1)-gon."""
    return Fraction(1, 2 * k - 1)


@dataclass(frozen=True, eq=False)
class CircularArrangement:
    k: int
    graph: Graph
    positions: tuple[Fraction, ...]
    alpha_cap: int = field(default=DEFAULT_CAP, repr=False)

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        pos = tuple(wrap(p) for p in self.positions)
        object.__setattr__(self, "positions", pos)
        if len(pos) != self.graph.n:
            raise ValueError(f"{len(pos)} positions for {self.graph.n} vertices")
        if len(set(pos)) != len(pos):
            raise ValueError("positions must be pairwise distinct")

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def sorted_order(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.n), key=self.positions.__getitem__))

    @cached_property
    def _sorted_pos(self) -> list[Fraction]:
        return [self.positions[v] for v in self.sorted_order]

    @cached_property
    def _vertex_at(self) -> dict[Fraction, int]:
        return {p: v for v, p in enumerate(self.positions)}

    @cached_property
    def independence(self) -> tuple[int, list[int]]:
        return independence_number(self.graph, cap=self.alpha_cap)

    @property
    def alpha(self) -> int:
        return self.independence[0]

    def vertex_at(self, p: RationalLike) -> int | None:
        return self._vertex_at.get(wrap(p))

    def lam(self, interval: CircularInterval) -> int:
        """Doubled vertex count of ``interval`` (see :func:`lambda_count`)."""
        sp = self._sorted_pos
        a = interval.start
        at_start = interval.start in self._vertex_at
        at_end = interval.end in self._vertex_at
        ws, we = MODE_WEIGHT[interval.start_mode], MODE_WEIGHT[interval.end_mode]
        if interval.full_circle:
            return 2 * (self.n - at_start) + (ws + we) * at_start
        e = a + (interval.end - a) % 1
        if e == a:
            return min(ws, we) * at_start
        if e <= 1:
            inside = bisect_left(sp, e) - bisect_right(sp, a)
        else:
            inside = bisect_left(sp, e - 1) + len(sp) - bisect_right(sp, a)
        return 2 * inside + ws * at_start + we * at_end

    def members(self, interval: CircularInterval) -> list[int]:
        """Vertices with nonzero weight in ``interval``, in circular order from its start."""
        out = [v for v in range(self.n) if point_weight(interval, self.positions[v])]
        return sorted(out, key=lambda v: (self.positions[v] - interval.start) % 1)

    def z_xi(self, xi: RationalLike) -> int:
        """Vertex closing the clockwise arc from ``xi`` holding ``floor(n/2)`` vertices."""
        if self.n < 2:
            raise PreconditionError("z_xi needs n >= 2")
        i = bisect_left(self._sorted_pos, wrap(xi))
        return self.sorted_order[(i + self.n // 2 - 1) % self.n]

    def z_mirror(self, xi: RationalLike) -> int:
        """Vertex ``z'`` with ``floor(n/2)`` vertices in ``[z', xi]``, scanning anticlockwise."""
        if self.n < 2:
            raise PreconditionError("z_mirror needs n >= 2")
        i = bisect_right(self._sorted_pos, wrap(xi)) - 1
        return self.sorted_order[(i - self.n // 2 + 1) % self.n]

    def half_arc(self, xi: RationalLike) -> CircularInterval:
        """The closed arc ``[xi, z_xi]``."""
        return arc(xi, self.positions[self.z_xi(xi)])

    def half_arc_vertices(self, xi: RationalLike) -> list[int]:
        i = bisect_left(self._sorted_pos, wrap(xi))
        return [self.sorted_order[(i + j) % self.n] for j in range(self.n // 2)]

    def mirror_arc_vertices(self, xi: RationalLike) -> list[int]:
        i = bisect_right(self._sorted_pos, wrap(xi)) - 1
        return [self.sorted_order[(i - j) % self.n] for j in range(self.n // 2)]

    def rotated(self, shift: RationalLike) -> "CircularArrangement":
        """Same graph with every position moved by ``-shift``."""
        s = rational(shift)
        return CircularArrangement(self.k, self.graph, tuple(p - s for p in self.positions),
                                   self.alpha_cap)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "graph": self.graph.to_json(),
            "positions": [format_rational(p) for p in self.positions],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "CircularArrangement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["k"]),
            Graph.from_json(data["graph"]),
            tuple(rational(p) for p in data["positions"]),
        )


def represent_blow_up(b: BlowUp, k: int) -> CircularArrangement:
    """Place a blow-up of F^k_d on the circle.

    With ``m`` base vertices and ``eps = 1/(2(2k-1)m)``, the ``j``-th vertex of
    class ``i`` (0-based) goes to ``i/m + j*eps/t_i``, so each class occupies
    ``[i/m, i/m + eps)``.
    """
    d = andrasfai_parameters(b.base, k)
    if d is None:
        raise PreconditionError(f"base graph is not F^{k}_d for any d")
    m = b.base.n
    eps = Fraction(1, 2 * (2 * k - 1) * m)
    positions = []
    for i, t in enumerate(b.multiplicities):
        positions += [Fraction(i, m) + j * eps / t for j in range(t)]
    return CircularArrangement(k, b.result, tuple(positions))


def arrangement_from_positions(positions: Sequence[RationalLike], k: int) -> CircularArrangement:
    """Build the graph that the angle rule induces on ``positions``."""
    pos = [wrap(p) for p in positions]
    c = threshold(k)
    edges = [
        (i, j)
        for i in range(len(pos))
        for j in range(i + 1, len(pos))
        if angle_fraction(pos[i], pos[j]) > c
    ]
    return CircularArrangement(k, Graph.from_edges(len(pos), edges), tuple(pos))


def verify_angle_property(arr: CircularArrangement) -> tuple[bool, tuple[int, int] | None]:
    """Check ``{x,y} in E  <=>  angle(x, y) > (k-1)/(2k-1)`` over all pairs.

    Returns ``(True, None)`` or ``(False, first_violating_pair)``.
    """
    c = threshold(arr.k)
    pos = arr.positions
    for x in range(arr.n):
        for y in range(x + 1, arr.n):
            if arr.graph.has_edge(x, y) != (angle_fraction(pos[x], pos[y]) > c):
                return False, (x, y)
    return True, None


def lambda_count(arr: CircularArrangement, interval: CircularInterval) -> int:
    """Doubled number of vertices in ``interval``.

    Interior vertices weigh 2, vertices on a closed endpoint 2, on a half
    endpoint 1, on an open endpoint 0.
    """
    return arr.lam(interval)


def z_xi(arr: CircularArrangement, xi: RationalLike) -> int:
    return arr.z_xi(xi)


def arc_edges(arr: CircularArrangement, xi: RationalLike) -> int:
    """Edges spanned by the arc half ``V ∩ [xi, z_xi]``."""
    return induced_edge_count(arr.graph, arr.half_arc_vertices(xi))


def mirror_arc_edges(arr: CircularArrangement, xi: RationalLike) -> int:
    """Edges spanned by ``V ∩ [z'_xi, xi]``."""
    return induced_edge_count(arr.graph, arr.mirror_arc_vertices(xi))

