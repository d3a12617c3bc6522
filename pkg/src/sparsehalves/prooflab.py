"""Instance-level checks of the arc-counting lemmas behind the sparse-half bound.

Every check is phrased as an implication ``hypotheses -> conclusion`` and
evaluated exactly.  Statements that would need global
(1/2, 1/(2(2k+1)^2))-density are checked with that hypothesis restricted to
the arc halves they use.  A blow-up can never satisfy the global version,
but single arcs often do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .circle import (
    CircularArrangement,
    arc_edges,
    mirror_arc_edges,
    step,
    threshold,
)
from .errors import PreconditionError, SparseHalvesError
from .exact import CircularInterval, RationalLike, arc, format_rational, interval_length, wrap
from .graphs import induced_edge_count

PARTS = ("i", "ii", "iii", "iv", "vi", "u4", "claim")
INTERVAL_PARTS = ("i", "ii", "iii")


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, CircularInterval):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    hypotheses_held: bool
    conclusion_held: bool
    trace: dict = field(default_factory=dict)

    @property
    def implication_held(self) -> bool:
        return not self.hypotheses_held or self.conclusion_held

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "hypotheses_held": self.hypotheses_held,
            "conclusion_held": self.conclusion_held,
            "implication_held": self.implication_held,
            "trace": _jsonable(self.trace),
        }


def _lam(arr: CircularArrangement, interval: CircularInterval) -> Fraction:
    return Fraction(arr.lam(interval), 2)


def _arc_dense(arr: CircularArrangement, edges: int) -> bool:
    """``edges > n^2 / (2(2k+1)^2)``."""
    return 2 * (2 * arr.k + 1) ** 2 * edges > arr.n * arr.n


def _require_divisible(arr: CircularArrangement, part: str) -> None:
    q = 2 * (2 * arr.k + 1)
    if arr.n % q:
        raise PreconditionError(f"part {part} needs {q} | n, got n={arr.n}")


def check_useful_lemma(
    arr: CircularArrangement,
    part: str,
    interval: CircularInterval | None = None,
    xi: RationalLike | None = None,
) -> CheckReport:
    """Check one counting lemma on ``arr``.

    Parts ``i``, ``ii``, ``iii`` take an ``interval`` and have a length
    hypothesis only.  Parts ``iv``, ``vi``, ``u4`` and ``claim`` take a point
    ``xi``; their hypotheses include density of the arc halves used.
    """
    if part not in PARTS:
        raise ValueError(f"unknown part {part!r}; expected one of {PARTS}")
    k, n, alpha = arr.k, arr.n, arr.alpha
    c, u = threshold(k), step(k)

    if part in INTERVAL_PARTS:
        if interval is None:
            raise ValueError(f"part {part} needs an interval")
        length = interval_length(interval)
        lam = _lam(arr, interval)
        trace: dict[str, Any] = {"k": k, "n": n, "alpha": alpha, "interval": interval,
                                 "length": length, "lambda": lam}
        if part == "i":
            members = arr.members(interval)
            independent = induced_edge_count(arr.graph, members) == 0
            trace["independent"] = independent
            return CheckReport("i", length <= c, independent and lam <= alpha, trace)
        if part == "ii":
            bound = (2 * k - 3) * alpha - (k - 2) * n
            trace["bound"] = bound
            return CheckReport("ii", length <= u, lam <= bound, trace)
        bound = n - 2 * alpha
        trace["bound"] = bound
        return CheckReport("iii", length >= u, lam >= bound, trace)

    if xi is None:
        raise ValueError(f"part {part} needs a point xi")
    xi = wrap(xi)
    if part != "claim":
        _require_divisible(arr, part)
    z = arr.z_xi(xi)
    pz = arr.positions[z]
    edges = arc_edges(arr, xi)
    dense = _arc_dense(arr, edges)
    trace = {"k": k, "n": n, "alpha": alpha, "xi": xi, "z_xi": z, "z_pos": pz,
             "arc_edges": edges, "arc_bound": Fraction(n * n, 2 * (2 * k + 1) ** 2),
             "arc_dense": dense}

    if part == "u4":
        left = _lam(arr, arc(xi, pz - c, "[", ")"))
        right = _lam(arr, arc(xi + c, pz, "(", "]"))
        rhs = Fraction(2 * n, 2 * k + 1) - 2 * right
        trace.update(lam_left=left, lam_right=right, rhs=rhs)
        return CheckReport("u4", dense, left > rhs, trace)

    if part == "iv":
        start_arc = _lam(arr, arc(xi, xi + c))
        left = _lam(arr, arc(xi, pz - c, "[", ")"))
        rhs = 2 * alpha - Fraction((2 * k - 1) * n, 2 * k + 1)
        trace.update(lam_start_arc=start_arc, lam_left=left, rhs=rhs)
        return CheckReport("iv", dense and start_arc == alpha, left > rhs, trace)

    if part == "vi":
        z_m = arr.z_mirror(xi)
        m_edges = mirror_arc_edges(arr, xi)
        m_dense = _arc_dense(arr, m_edges)
        near = _lam(arr, arc(xi - u, xi + u, "(", ")"))
        far = _lam(arr, arc(xi + c, xi - c, "(", ")"))
        rhs = Fraction(4 * n, 2 * k + 1) - 2 * far
        trace.update(z_mirror=z_m, mirror_arc_edges=m_edges, mirror_arc_dense=m_dense,
                     lam_near=near, lam_far=far, rhs=rhs)
        hyp = dense and m_dense and 2 * alpha < n
        return CheckReport("vi", hyp, near > rhs, trace)

    # the per-arc sum whose total over a winding period contradicts density
    target = Fraction((2 * k - 1) * n, 2 * (2 * k + 1))
    v_xi = arr.members(arc(xi, pz - c, "[", ")"))
    total = sum((_lam(arr, arc(arr.positions[x], arr.positions[x] + c, "<", ">")) - target
                 for x in v_xi), Fraction(0))
    trace.update(v_xi=v_xi, target=target, sum=total)
    hyp = dense and n % 2 == 0 and 2 * alpha < n
    return CheckReport("claim", hyp, total < 0, trace)


def partition_identity_check(arr: CircularArrangement) -> CheckReport:
    """Sum over vertices of the two half-weighted side arcs versus full circle minus far arc.

    With ``c = (k-1)/(2k-1)`` and ``u = 1/(2k-1)``::

        sum_x lam<x-c, x> + lam<x, x+c>  ==  sum_x lam<x, x+1> - lam<x+c, x+c+u>
    """
    c, u = threshold(arr.k), step(arr.k)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for p in arr.positions:
        lhs += _lam(arr, arc(p - c, p, "<", ">")) + _lam(arr, arc(p, p + c, "<", ">"))
        rhs += _lam(arr, arc(p, p + 1, "<", ">")) - _lam(arr, arc(p + c, p + c + u, "<", ">"))
    return CheckReport("identity", True, lhs == rhs, {"n": arr.n, "lhs": lhs, "rhs": rhs})


@dataclass(frozen=True)
class WindingTrace:
    """Periodic part of ``x -> z_x - (k-1)/(2k-1)`` started from ``x0``.

    ``points`` is one period starting at the first repeated point, ``period``
    its length and ``winding`` the number of turns made over one period.
    """

    x0: Fraction
    tail: tuple[Fraction, ...]
    points: tuple[Fraction, ...]
    period: int
    winding: int
    steps: tuple[Fraction, ...]
    coverage: Fraction
    weighted_sum: Fraction
    weighted_total: Fraction

    @property
    def start(self) -> Fraction:
        return self.points[0]

    @property
    def closes(self) -> bool:
        nxt = wrap(self.points[-1] + self.steps[-1])
        return nxt == self.points[0]

    def to_json(self) -> dict:
        return _jsonable({
            "x0": self.x0,
            "tail": list(self.tail),
            "points": list(self.points),
            "period": self.period,
            "winding": self.winding,
            "steps": list(self.steps),
            "coverage": self.coverage,
            "weighted_sum": self.weighted_sum,
            "weighted_total": self.weighted_total,
        })


def in_v_star(arr: CircularArrangement, x: RationalLike) -> bool:
    """``x + (k-1)/(2k-1)`` is a vertex position."""
    return arr.vertex_at(wrap(x) + threshold(arr.k)) is not None


def winding_trace(arr: CircularArrangement, x0: RationalLike) -> WindingTrace:
    """Iterate ``x(i+1) = z_{x(i)} - (k-1)/(2k-1)`` from ``x0`` until it repeats.

    Besides the period and winding number the trace records two sums that
    must agree for any period: the vertex count of the arcs
    ``[x(i), x(i+1))`` (``winding * n``) and the weighted sum of
    ``lam<x, x+c> - (2k-1)n/(2(2k+1))`` over those arcs (``winding`` times the
    same sum over all of ``V``).
    """
    c = threshold(arr.k)
    x0 = wrap(x0)
    if not in_v_star(arr, x0):
        raise PreconditionError(f"{format_rational(x0)} is not in V*")
    # with n even and alpha < n/2 no arc of length c holds n/2 vertices,
    # so the map has no fixed point and every period winds at least once
    if arr.n % 2:
        raise PreconditionError("winding_trace needs n even")
    if 2 * arr.alpha >= arr.n:
        raise PreconditionError("winding_trace needs alpha(G) < n/2")
    seen = {x0: 0}
    seq = [x0]
    while True:
        nxt = wrap(arr.positions[arr.z_xi(seq[-1])] - c)
        if nxt in seen:
            cycle = seq[seen[nxt]:]
            tail = seq[:seen[nxt]]
            break
        seen[nxt] = len(seq)
        seq.append(nxt)
    m = len(cycle)
    steps = tuple((cycle[(i + 1) % m] - cycle[i]) % 1 for i in range(m))
    turns = sum(steps, Fraction(0))
    if turns.denominator != 1:
        raise SparseHalvesError("winding sum is not an integer")

    target = Fraction((2 * arr.k - 1) * arr.n, 2 * (2 * arr.k + 1))

    def f(v: int) -> Fraction:
        p = arr.positions[v]
        return _lam(arr, arc(p, p + c, "<", ">")) - target

    coverage = Fraction(0)
    weighted = Fraction(0)
    for i in range(m):
        piece = arc(cycle[i], cycle[i] + steps[i], "[", ")")
        coverage += _lam(arr, piece)
        weighted += sum((f(v) for v in arr.members(piece)), Fraction(0))
    return WindingTrace(
        x0=x0,
        tail=tuple(tail),
        points=tuple(cycle),
        period=m,
        winding=int(turns),
        steps=steps,
        coverage=coverage,
        weighted_sum=weighted,
        weighted_total=sum((f(v) for v in range(arr.n)), Fraction(0)),
    )


@dataclass(frozen=True)
class Prop32Report:
    """Regular-polygon construction around a maximum independent arc.

    ``arrangement`` is the rotated copy in which ``[0, (k-1)/(2k-1)]`` holds a
    maximum independent set; all points refer to it.
    """

    arrangement: CircularArrangement = field(repr=False)
    shift: Fraction
    anchor: int
    alpha: int
    z0: int
    z_prime: int
    b: tuple[Fraction, ...]
    lambdas: dict
    identity_held: bool
    gon_held: bool
    g2_held: bool | None
    g1: CheckReport
    g3: CheckReport | None

    @property
    def unconditional_held(self) -> bool:
        return self.identity_held and self.gon_held and self.g2_held is not False

    def to_json(self) -> dict:
        return _jsonable({
            "shift": self.shift,
            "anchor": self.anchor,
            "alpha": self.alpha,
            "z0": self.z0,
            "z_prime": self.z_prime,
            "b": list(self.b),
            "lambdas": self.lambdas,
            "identity_held": self.identity_held,
            "gon_held": self.gon_held,
            "g2_held": self.g2_held,
            "g1": self.g1.to_json(),
            "g3": None if self.g3 is None else self.g3.to_json(),
        })


def prop32_geometry(arr: CircularArrangement) -> Prop32Report:
    """Build the polygon ``b_0..b_{2k-2}`` and evaluate the inequalities around it.

    The arrangement is first rotated so that ``[0, c]`` holds a maximum
    independent set, using the least-index vertex whose arc ``[p, p + c]``
    does.  Then ``z_0`` closes the half from 0, ``z'`` closes the half ending
    at ``c``, ``b_k = z_0`` and ``b_0 = z_0 + c``.

    Unconditional: ``lam((z_0, z')) = alpha`` and, for ``k >= 3``,
    ``lam((b_{k+1}, b_{2k-2})) <= 2 alpha - lam((b_{k-1}, b_1))``.
    Conditional on arc density: the upper bound on ``lam([b_1, b_{k-1}])``
    and, for ``k >= 4``, the matching lower bound.
    """
    k, n, alpha = arr.k, arr.n, arr.alpha
    c, u = threshold(k), step(k)
    if 2 * alpha >= n:
        raise PreconditionError("prop32_geometry needs alpha(G) < n/2")
    if n % 2:
        raise PreconditionError("prop32_geometry needs n even")

    anchor = next((v for v in range(n)
                   if arr.lam(arc(arr.positions[v], arr.positions[v] + c)) == 2 * alpha), None)
    if anchor is None:
        raise SparseHalvesError("no arc of length (k-1)/(2k-1) holds a maximum independent set")
    shift = arr.positions[anchor]
    rot = arr.rotated(shift)
    # share the already computed independence number
    rot.__dict__["independence"] = arr.independence

    z0 = rot.z_xi(0)
    zp = rot.z_mirror(c)
    p0, pp = rot.positions[z0], rot.positions[zp]
    lam = lambda left, a, b, right: _lam(rot, arc(a, b, left, right))  # noqa: E731

    identity = lam("(", p0, pp, ")")
    q = 2 * k - 1
    b = tuple(wrap(p0 + (i - k) * u) for i in range(q))

    def B(i: int) -> Fraction:
        return b[i % q]

    gon_held = (
        all((B(i + 1) - B(i)) % 1 == u for i in range(q))
        and (B(0) - B(k)) % 1 == c
        and (pp - p0) % 1 >= c
    )

    mid = lam("[", B(1), B(k - 1), "]")
    far = lam("(", B(k + 1), B(2 * k - 2), ")") if k >= 3 else None
    outer = lam("(", B(k - 1), B(1), ")")
    lambdas = {
        "lam_z0_zprime": identity,
        "lam_b1_bkm1": mid,
        "lam_bkm1_b1": outer,
        "lam_0_b1": lam("[", Fraction(0), B(1), ")"),
        "lam_bkm1_c": lam("(", B(k - 1), c, "]"),
        "lam_0_c": lam("[", Fraction(0), c, "]"),
    }
    if far is not None:
        lambdas["lam_bkp1_b2km2"] = far
    g2_held = None if k < 3 else far <= 2 * alpha - outer

    divisible = n % (2 * (2 * k + 1)) == 0
    e0, em = arc_edges(rot, 0), mirror_arc_edges(rot, c)
    g1_rhs = Fraction((4 * k - 2) * n, 2 * k + 1) - 3 * alpha
    g1 = CheckReport(
        "g1",
        divisible and _arc_dense(rot, e0) and _arc_dense(rot, em),
        mid < g1_rhs,
        {"divisible": divisible, "arc_edges_0": e0, "mirror_arc_edges_c": em,
         "lam_b1_bkm1": mid, "rhs": g1_rhs},
    )

    g3 = None
    if k >= 4:
        hyp = divisible
        per_i = []
        for i in range(2, k - 1):
            ea, eb = arc_edges(rot, B(i)), mirror_arc_edges(rot, B(i))
            hyp = hyp and _arc_dense(rot, ea) and _arc_dense(rot, eb)
            per_i.append({"i": i, "arc_edges": ea, "mirror_arc_edges": eb,
                          "lam_I": lam("(", B(i - 1), B(i + 1), ")"),
                          "lam_opposite": lam("(", B(i + k - 1), B(i + k), ")")})
        g3_lhs = Fraction((4 * k - 5) * n, 2 * k + 1) - 2 * alpha - mid
        g3 = CheckReport("g3", hyp, g3_lhs < far,
                         {"divisible": divisible, "lhs": g3_lhs, "lam_bkp1_b2km2": far,
                          "per_i": per_i})

    return Prop32Report(
        arrangement=rot,
        shift=shift,
        anchor=anchor,
        alpha=alpha,
        z0=z0,
        z_prime=zp,
        b=b,
        lambdas=lambdas,
        identity_held=identity == alpha,
        gon_held=gon_held,
        g2_held=g2_held,
        g1=g1,
        g3=g3,
    )


def sample_point(arr: CircularArrangement, rng) -> Fraction:
    """A vertex position, a point just off one, or a random rational."""
    p = arr.positions[rng.randrange(arr.n)]
    kind = rng.randrange(3)
    if kind == 0:
        return p
    if kind == 1:
        return wrap(p + Fraction(rng.choice((-1, 1)), 4 * (2 * arr.k - 1) * 10 * arr.n))
    return Fraction(rng.randrange(997), 997)


def sample_interval(arr: CircularArrangement, rng) -> CircularInterval:
    """Random interval whose endpoints and length often sit on the critical values."""
    c, u = threshold(arr.k), step(arr.k)
    start = sample_point(arr, rng)
    kind = rng.randrange(4)
    if kind == 0:
        length = rng.choice((c, u))
    elif kind == 1:
        length = (arr.positions[rng.randrange(arr.n)] - start) % 1
    elif kind == 2:
        length = rng.choice((c, u)) * Fraction(rng.randint(1, 19), 10)
    else:
        length = Fraction(rng.randrange(1, 991), 991)
    length = min(length, Fraction(1))
    return arc(start, start + length, rng.choice("[(<"), rng.choice("])>"))
