"""Local density: sparsest s-subsets, (alpha, beta)-density, arc sweeps, beta tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from .circle import CircularArrangement
from .errors import BudgetExceeded, PreconditionError
from .exact import CircularInterval, RationalLike, arc, format_rational, rational
from .graphs import Graph, bits, induced_edge_count


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exact subset search."""

    max_n: int = 30
    max_nodes: int = 20_000_000

    def __post_init__(self) -> None:
        if self.max_n <= 0 or self.max_nodes <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = SearchBudget()


def _greedy_peel(g: Graph, s: int) -> int:
    """Drop a max-degree vertex (highest index on ties) until ``s`` remain; returns the mask."""
    mask = (1 << g.n) - 1
    for _ in range(g.n - s):
        best_v, best_d = -1, -1
        for v in bits(mask):
            dv = (g.adj[v] & mask).bit_count()
            if dv >= best_d:
                best_v, best_d = v, dv
        mask &= ~(1 << best_v)
    return mask


def min_edges_over_subsets(
    g: Graph,
    s: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    use_twins: bool = True,
) -> tuple[int, list[int]]:
    """Fewest edges spanned by any ``s``-subset, with the lexicographically least witness.

    Depth-first over vertices ``0..n-1``, include before exclude, so subsets
    are met in lexicographic order and only strict improvements are kept.  A
    branch is cut when its partial edge count plus the ``r`` smallest
    back-degrees into the current set (``r`` picks left) cannot beat the best.
    With ``use_twins`` vertices sharing a neighbourhood are only taken as a
    prefix of their class, which keeps the lexicographically least optimum.
    """
    n = g.n
    if not 0 <= s <= n:
        raise PreconditionError(f"subset size {s} outside 0..{n}")
    if n > budget.max_n:
        raise BudgetExceeded(f"n={n} exceeds subset-search cap {budget.max_n}")
    if s == 0:
        return 0, []

    adj = g.adj
    later_twins = [0] * n
    if use_twins:
        rep = g.twin_classes()
        for v in range(n):
            for w in range(v + 1, n):
                if rep[w] == rep[v]:
                    later_twins[v] |= 1 << w

    upper = induced_edge_count(g, _greedy_peel(g, s))
    best = upper + 1
    best_mask = 0
    nodes = 0
    full = (1 << n) - 1

    def search(idx: int, chosen: int, size: int, edges: int, blocked: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded(f"subset search exceeded {budget.max_nodes} nodes")
        r = s - size
        if r == 0:
            if edges < best:
                best, best_mask = edges, chosen
            return
        cand = full >> idx << idx & ~blocked
        if cand.bit_count() < r:
            return
        costs = sorted((adj[v] & chosen).bit_count() for v in bits(cand))
        if edges + sum(costs[:r]) >= best:
            return
        v = idx
        while not cand >> v & 1:
            v += 1
        gain = (adj[v] & chosen).bit_count()
        search(v + 1, chosen | 1 << v, size + 1, edges + gain, blocked)
        search(v + 1, chosen, size, edges, blocked | later_twins[v])

    search(0, 0, 0, 0, 0)
    return best, bits(best_mask)


@dataclass(frozen=True)
class DensityVerdict:
    alpha: Fraction
    beta: Fraction
    n: int
    s: int
    dense: bool
    min_edges: int
    witness: tuple[int, ...] | None

    @property
    def bound(self) -> Fraction:
        """``beta * n^2``, the edge count a dense graph must strictly exceed."""
        return self.beta * self.n * self.n

    def to_json(self) -> dict:
        out = {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "n": self.n,
            "s": self.s,
            "dense": self.dense,
            "min_edges": self.min_edges,
            "bound": format_rational(self.bound),
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
            out["witness_edges"] = self.min_edges
        return out


def is_dense(
    g: Graph,
    alpha: RationalLike,
    beta: RationalLike,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> DensityVerdict:
    """Is every ``floor(alpha n)``-subset spanning strictly more than ``beta n^2`` edges?"""
    alpha, beta = rational(alpha), rational(beta)
    if not 0 < alpha <= 1:
        raise PreconditionError("alpha must lie in (0, 1]")
    if beta < 0:
        raise PreconditionError("beta must be nonnegative")
    s = floor(alpha * g.n)
    value, witness = min_edges_over_subsets(g, s, budget)
    dense = value > beta * g.n * g.n
    return DensityVerdict(alpha, beta, g.n, s, dense, value,
                          None if dense else tuple(witness))


@dataclass(frozen=True)
class SweepReport:
    min_edges: int
    witness_start: int
    witness_end: int
    witness_interval: CircularInterval
    witness: tuple[int, ...]
    per_start: tuple[tuple[int, int], ...] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "min_edges": self.min_edges,
            "witness_start": self.witness_start,
            "witness_end": self.witness_end,
            "witness_interval": [format_rational(self.witness_interval.start),
                                 format_rational(self.witness_interval.end)],
            "witness": list(self.witness),
            "per_start": [{"vertex": v, "edges": e} for v, e in self.per_start],
        }


def arc_sweep(arr: CircularArrangement) -> SweepReport:
    """Sparsest arc half ``V ∩ [xi, z_xi]`` over all starts ``xi`` at a vertex.

    Moving ``xi`` between consecutive vertices never changes the arc's vertex
    set, so the ``n`` vertex starts cover every arc half.  Ties go to the
    least starting vertex index.
    """
    if arr.n < 2:
        raise PreconditionError("arc_sweep needs n >= 2")
    per_start = []
    best = None
    for v in range(arr.n):
        xi = arr.positions[v]
        members = arr.half_arc_vertices(xi)
        e = induced_edge_count(arr.graph, members)
        per_start.append((v, e))
        if best is None or e < best[0]:
            best = (e, v, members)
    e, v, members = best
    z = members[-1]
    return SweepReport(
        min_edges=e,
        witness_start=v,
        witness_end=z,
        witness_interval=arc(arr.positions[v], arr.positions[z]),
        witness=tuple(sorted(members)),
        per_start=tuple(per_start),
    )


def sweep_bound(k: int, n: int) -> Fraction:
    """``n^2 / (2(2k+1)^2)``."""
    return Fraction(n * n, 2 * (2 * k + 1) ** 2)


def eq1_target(alpha: Fraction) -> Fraction:
    """Complete bipartite value ``(2 alpha - 1) / 4``."""
    return (2 * alpha - 1) / 4


def eq2_target(alpha: Fraction) -> Fraction:
    """Five-cycle blow-up value ``(5 alpha - 2) / 25``."""
    return (5 * alpha - 2) / 25


BETA_COLUMNS = ("construction", "n", "alpha", "s", "min_edges", "ratio", "eq1_target", "eq2_target")


def beta_table(
    constructions: Sequence[tuple[str, Graph]],
    alphas: Iterable[RationalLike],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> list[dict]:
    """One row per (construction, alpha) with the exact ratio ``min_edges / n^2``.

    Rows whose search exceeds the budget carry ``"budget_exceeded"`` in
    ``min_edges`` and an empty ratio.
    """
    alphas = [rational(a) for a in alphas]
    rows = []
    for label, g in constructions:
        for a in alphas:
            s = floor(a * g.n)
            row = {
                "construction": label,
                "n": g.n,
                "alpha": a,
                "s": s,
                "eq1_target": eq1_target(a),
                "eq2_target": eq2_target(a),
            }
            try:
                value, _ = min_edges_over_subsets(g, s, budget)
            except BudgetExceeded:
                row["min_edges"] = "budget_exceeded"
                row["ratio"] = None
            else:
                row["min_edges"] = value
                row["ratio"] = Fraction(value, g.n * g.n)
            rows.append(row)
    return rows


def beta_table_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BETA_COLUMNS)
    for row in rows:
        writer.writerow(
            format_rational(row[c]) if isinstance(row[c], Fraction)
            else ("" if row[c] is None else row[c])
            for c in BETA_COLUMNS
        )
    return buf.getvalue()
