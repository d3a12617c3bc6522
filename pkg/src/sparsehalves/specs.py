"""Parser for graph spec strings.

Grammar::

    spec   := base [ "x" T | "x[" t1 "," ... "]" ] | "@" path
    base   := "F(" k "," d ")" | "C(" n ")" | "K(" a "," b ")" | "petersen"

``@path`` reads either the graph schema ``{"n", "edges"}`` or the
arrangement schema ``{"k", "graph", "positions"}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .andrasfai import BlowUp, blow_up, generalized_andrasfai
from .circle import CircularArrangement, represent_blow_up
from .errors import PreconditionError
from .graphs import Graph, complete_bipartite, cycle, petersen

_BASE = re.compile(
    r"""^\s*(?:
        F\(\s*(?P<k>\d+)\s*,\s*(?P<d>\d+)\s*\)
      | C\(\s*(?P<cn>\d+)\s*\)
      | K\(\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\)
      | (?P<petersen>petersen)
    )\s*(?:x\s*(?:(?P<t>\d+)|\[(?P<ts>[\d\s,]*)\]))?\s*$""",
    re.VERBOSE,
)


class SpecError(ValueError):
    """Malformed spec string."""


@dataclass(frozen=True)
class Instance:
    label: str
    graph: Graph
    k: int | None = None
    blowup: BlowUp | None = None
    arrangement: CircularArrangement | None = None

    def circle(self) -> CircularArrangement:
        """The circle representation, when the spec string determines one."""
        if self.arrangement is not None:
            return self.arrangement
        if self.k is None or self.blowup is None:
            raise PreconditionError(
                f"{self.label!r} has no circle representation; use F(k,d)... or an arrangement file"
            )
        return represent_blow_up(self.blowup, self.k)


def parse_spec(spec: str) -> Instance:
    spec = spec.strip()
    if spec.startswith("@"):
        return _load_file(spec[1:], spec)
    m = _BASE.match(spec)
    if not m:
        raise SpecError(f"malformed spec {spec!r}")
    k = None
    try:
        if m["k"]:
            k = int(m["k"])
            base = generalized_andrasfai(k, int(m["d"]))
        elif m["cn"]:
            base = cycle(int(m["cn"]))
        elif m["a"]:
            base = complete_bipartite(int(m["a"]), int(m["b"]))
        else:
            base = petersen()
    except ValueError as exc:
        raise SpecError(f"{spec!r}: {exc}") from exc

    if m["t"] is None and m["ts"] is None:
        return Instance(spec, base, k, blow_up(base, 1))
    if m["t"] is not None:
        mult = int(m["t"])
    else:
        try:
            mult = [int(x) for x in m["ts"].split(",") if x.strip()]
        except ValueError as exc:
            raise SpecError(f"bad multiplicities in {spec!r}") from exc
    try:
        b = blow_up(base, mult)
    except ValueError as exc:
        raise SpecError(f"{spec!r}: {exc}") from exc
    return Instance(spec, b.result, k, b)


def _load_file(path: str, label: str) -> Instance:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    try:
        if "positions" in data:
            arr = CircularArrangement.from_json(data)
            return Instance(label, arr.graph, arr.k, None, arr)
        return Instance(label, Graph.from_json(data))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise SpecError(f"{path}: not a graph or arrangement file ({exc})") from exc
