"""Graph homomorphism search by backtracking with arc consistency."""

from __future__ import annotations

from dataclasses import dataclass
from .andrasfai import BlowUp, generalized_andrasfai
from .errors import CapExceeded
from .graphs import Graph, bits

SOURCE_CAP = 40
TARGET_CAP = 40


@dataclass(frozen=True)
class Homomorphism:
    source: Graph
    target: Graph
    map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"found": True, "map": list(self.map)}


def verify_homomorphism(h: Homomorphism) -> bool:
    """True iff every source edge lands on a target edge."""
    if len(h.map) != h.source.n:
        raise IndexError(f"map has {len(h.map)} entries for {h.source.n} source vertices")
    for a in h.map:
        if not 0 <= a < h.target.n:
            raise IndexError(f"target vertex {a} out of range")
    return all(h.target.has_edge(h.map[u], h.map[v]) for u, v in h.source.edges)


def compose(first: Homomorphism, second: Homomorphism) -> Homomorphism:
    """``second ∘ first``: G -> H -> K."""
    if first.target != second.source:
        raise ValueError("homomorphisms do not compose")
    return Homomorphism(first.source, second.target, tuple(second.map[a] for a in first.map))


def find_homomorphism(
    g: Graph,
    h: Graph,
    source_cap: int = SOURCE_CAP,
    target_cap: int = TARGET_CAP,
    full: bool = False,
) -> Homomorphism | None:
    """First homomorphism ``g -> h`` in branch order, or ``None`` if none exists.

    Source vertices are branched on by descending degree (ties by index),
    target values in ascending order.  With ``full=True`` non-edges must also
    map to non-edges (or to a single vertex), which is the blow-up condition.
    """
    if g.n > source_cap:
        raise CapExceeded(f"source has {g.n} vertices, cap {source_cap}")
    if h.n > target_cap:
        raise CapExceeded(f"target has {h.n} vertices, cap {target_cap}")
    if g.n == 0:
        return Homomorphism(g, h, ())
    if h.n == 0:
        return None

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    everything = (1 << h.n) - 1
    non_adj = [everything & ~a for a in h.adj]
    domains = [everything] * g.n
    for v in range(g.n):
        if g.adj[v]:
            # a vertex with a neighbour needs an image with a neighbour
            domains[v] = sum(1 << a for a in range(h.n) if h.adj[a])
    g_nonadj = [((1 << g.n) - 1) & ~(a | (1 << v)) for v, a in enumerate(g.adj)]

    def supported(dom_y: int, dom_z: int) -> int:
        keep = 0
        m = dom_y
        while m:
            low = m & -m
            if h.adj[low.bit_length() - 1] & dom_z:
                keep |= low
            m ^= low
        return keep

    def propagate(doms: list[int], assigned: list[bool], touched: list[int]) -> bool:
        queue = list(touched)
        queued = set(queue)
        while queue:
            z = queue.pop()
            queued.discard(z)
            for y in bits(g.adj[z]):
                if assigned[y]:
                    continue
                new = supported(doms[y], doms[z])
                if new != doms[y]:
                    if not new:
                        return False
                    doms[y] = new
                    if y not in queued:
                        queue.append(y)
                        queued.add(y)
        return True

    image = [-1] * g.n
    assigned = [False] * g.n

    def search(idx: int, doms: list[int]) -> bool:
        if idx == g.n:
            return True
        x = order[idx]
        for a in bits(doms[x]):
            new = list(doms)
            new[x] = 1 << a
            ok = True
            touched = [x]
            for y in bits(g.adj[x]):
                if not assigned[y]:
                    new[y] &= h.adj[a]
                    if not new[y]:
                        ok = False
                        break
                    touched.append(y)
            if ok and full:
                for y in bits(g_nonadj[x]):
                    if not assigned[y]:
                        new[y] &= non_adj[a]
                        if not new[y]:
                            ok = False
                            break
            if not ok:
                continue
            assigned[x] = True
            if propagate(new, assigned, touched):
                image[x] = a
                if search(idx + 1, new):
                    return True
            assigned[x] = False
        image[x] = -1
        return False

    if not propagate(domains, assigned, list(range(g.n))):
        return None
    if search(0, domains):
        return Homomorphism(g, h, tuple(image))
    return None


def min_andrasfai_index(
    g: Graph,
    k: int,
    d_max: int,
    source_cap: int = SOURCE_CAP,
    target_cap: int = TARGET_CAP,
) -> int | None:
    """Least ``d <= d_max`` with ``g -> F^k_d``, or ``None``."""
    for d in range(1, d_max + 1):
        if find_homomorphism(g, generalized_andrasfai(k, d), source_cap, target_cap) is not None:
            return d
    return None


def blow_up_homomorphism(b: BlowUp) -> Homomorphism:
    """The class map of a blow-up, as a homomorphism onto its base."""
    return Homomorphism(b.result, b.base, b.class_of)


def recognize_blow_up(g: Graph, k: int, d_max: int = 9) -> tuple[int, Homomorphism] | None:
    """Best effort: find ``d`` and a class map exhibiting ``g`` as a blow-up of F^k_d.

    Searches for a homomorphism that also maps non-edges to non-edges.  A
    ``None`` only means nothing was found up to ``d_max``.
    """
    for d in range(1, d_max + 1):
        base = generalized_andrasfai(k, d)
        hom = find_homomorphism(g, base, full=True, source_cap=max(g.n, SOURCE_CAP),
                                target_cap=max(base.n, TARGET_CAP))
        if hom is not None:
            return d, hom
    return None
