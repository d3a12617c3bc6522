"""Exact rational arithmetic on the circle R/Z.

Points on the circle are plain :class:`fractions.Fraction` values kept in
``[0, 1)``.  Intervals carry an endpoint mode per side:

* ``closed`` -- the endpoint belongs to the interval,
* ``open``   -- it does not,
* ``half``   -- a vertex sitting exactly on it is counted with weight 1/2.

Weights are handled as doubled integers (closed = 2, half = 1, open = 0) so
that half-counts never leave integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
CirclePoint = Fraction

RationalLike = Union[Fraction, int, str]

CLOSED = "closed"
OPEN = "open"
HALF = "half"
MODES = (CLOSED, OPEN, HALF)

MODE_WEIGHT = {CLOSED: 2, HALF: 1, OPEN: 0}

_LEFT = {"[": CLOSED, "(": OPEN, "<": HALF}
_RIGHT = {"]": CLOSED, ")": OPEN, ">": HALF}
_LEFT_CHAR = {v: k for k, v in _LEFT.items()}
_RIGHT_CHAR = {v: k for k, v in _RIGHT.items()}

OUTSIDE = "outside"
INTERIOR = "interior"
BOUNDARY_START = "boundary_start"
BOUNDARY_END = "boundary_end"


def rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction; strings may be ``"p/q"`` or ``"p"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational string")
        num, sep, den = s.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {x!r}") from exc
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


def format_rational(q: RationalLike) -> str:
    """Canonical ``"num/den"`` form, e.g. ``"-1/3"`` or ``"2/1"``."""
    q = rational(q)
    return f"{q.numerator}/{q.denominator}"


def wrap(x: RationalLike) -> Fraction:
    """Reduce a rational into ``[0, 1)``."""
    return rational(x) % 1


def circle_distance(x: Fraction, y: Fraction) -> Fraction:
    """Clockwise distance from ``x`` to ``y``, in ``[0, 1)``."""
    return (y - x) % 1


def angle_fraction(x: RationalLike, y: RationalLike) -> Fraction:
    """Smaller central angle between ``x`` and ``y`` as a fraction of a full turn.

    The result lies in ``[0, 1/2]``; multiply by 360 for degrees.
    """
    d = (rational(y) - rational(x)) % 1
    return min(d, 1 - d) if d else d


@dataclass(frozen=True)
class CircularInterval:
    """An arc from ``start`` clockwise to ``end`` with per-endpoint modes.

    ``full_circle`` arcs start and end at the same point and have length 1.
    They follow the lift to R: the seam point is both the start and the end,
    so ``<x, x+1>`` counts a vertex at ``x`` once and ``[x, x+1]`` twice.
    """

    start: Fraction
    end: Fraction
    start_mode: str = CLOSED
    end_mode: str = CLOSED
    full_circle: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", wrap(self.start))
        object.__setattr__(self, "end", wrap(self.end))
        for mode in (self.start_mode, self.end_mode):
            if mode not in MODES:
                raise ValueError(f"unknown endpoint mode {mode!r}")
        if self.full_circle and self.start != self.end:
            raise ValueError("a full-circle interval must start where it ends")

    @property
    def length(self) -> Fraction:
        return interval_length(self)

    def __str__(self) -> str:
        end = f"{format_rational(self.end)}+1" if self.full_circle else format_rational(self.end)
        return (
            f"{_LEFT_CHAR[self.start_mode]}{format_rational(self.start)}, "
            f"{end}{_RIGHT_CHAR[self.end_mode]}"
        )


def arc(a: RationalLike, b: RationalLike, left: str = "[", right: str = "]") -> CircularInterval:
    """Build the interval from ``a`` clockwise to ``b``.

    ``left`` is one of ``[ ( <`` and ``right`` one of ``] ) >``; angle
    brackets mark half-weighted endpoints.  Endpoints are read unwrapped, so
    ``arc(x, x + 1)`` is the full circle based at ``x``.
    """
    a, b = rational(a), rational(b)
    try:
        sm, em = _LEFT[left], _RIGHT[right]
    except KeyError:
        raise ValueError(f"bad bracket pair {left!r}, {right!r}") from None
    return CircularInterval(a, b, sm, em, full_circle=(b - a == 1))


def interval_length(interval: CircularInterval) -> Fraction:
    if interval.full_circle:
        return Fraction(1)
    return (interval.end - interval.start) % 1


def interval_contains(interval: CircularInterval, p: RationalLike) -> str:
    """Classify ``p`` as outside, interior, or on a (non-open) endpoint."""
    p = wrap(p)
    d = (p - interval.start) % 1
    sm, em = interval.start_mode, interval.end_mode
    if interval.full_circle:
        if d:
            return INTERIOR
        return BOUNDARY_START if (sm != OPEN or em != OPEN) else OUTSIDE
    length = (interval.end - interval.start) % 1
    if d == 0:
        if length == 0 and em == OPEN:
            return OUTSIDE
        return BOUNDARY_START if sm != OPEN else OUTSIDE
    if d < length:
        return INTERIOR
    if d == length:
        return BOUNDARY_END if em != OPEN else OUTSIDE
    return OUTSIDE


def point_weight(interval: CircularInterval, p: RationalLike) -> int:
    """Doubled counting weight of a vertex at ``p`` (0, 1, 2, or 4 on a closed seam)."""
    where = interval_contains(interval, p)
    if where == OUTSIDE:
        return 0
    if where == INTERIOR:
        return 2
    ws, we = MODE_WEIGHT[interval.start_mode], MODE_WEIGHT[interval.end_mode]
    if interval.full_circle:
        return ws + we
    if interval.start == interval.end:
        return min(ws, we)
    return ws if where == BOUNDARY_START else we
