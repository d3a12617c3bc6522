"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Each vertex's neighbourhood is a Python ``int`` used as a bitset, so induced
edge counts reduce to ``popcount(adj[v] & mask)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded

DEFAULT_CAP = 64


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.  Build with :meth:`from_edges`."""

    n: int
    adj: tuple[int, ...]
    _edges: tuple[tuple[int, int], ...] = field(repr=False, default=())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        pairs = tuple((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1)))
        return cls(n, tuple(adj), pairs)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edge list with ``u < v``."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        return d is None or not degs or degs == {d}

    def twin_classes(self) -> list[int]:
        """Representative (least index) of each vertex's open-neighbourhood class.

        Vertices with equal neighbourhoods are non-adjacent and interchangeable
        in every question this package asks.
        """
        first: dict[int, int] = {}
        return [first.setdefault(a, v) for v, a in enumerate(self.adj)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(int(data["n"]), data["edges"])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_subset(g: Graph, subset: Iterable[int]) -> int:
    m = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
        m |= 1 << v
    return m


def induced_edge_count(g: Graph, subset: Iterable[int] | int) -> int:
    """Number of edges with both ends in ``subset`` (a vertex iterable or bitmask)."""
    if isinstance(subset, int):
        if subset >> g.n:
            raise IndexError("subset mask has bits beyond n")
        mask = subset
    else:
        mask = _check_subset(g, subset)
    total = 0
    m = mask
    while m:
        low = m & -m
        total += (g.adj[low.bit_length() - 1] & mask).bit_count()
        m ^= low
    return total // 2


def is_independent(g: Graph, subset: Iterable[int]) -> bool:
    return induced_edge_count(g, subset) == 0


INFINITE = None


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or ``None`` if ``g`` is bipartite.

    From every source a BFS layers the graph; an edge inside a layer at depth
    ``h`` closes an odd walk of length ``2h + 1``, and the minimum over all
    sources is the odd girth.
    """
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in bits(g.adj[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                elif dist[v] == dist[u]:
                    length = 2 * dist[u] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(g: Graph) -> bool:
    return odd_girth(g) is None


def _clique_cover_bound(g: Graph, cand: int) -> int:
    """Greedy clique cover size of ``cand``: an upper bound on its independence number."""
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique = low
        common = g.adj[v] & cand
        while common:
            w = common & -common
            clique |= w
            common &= g.adj[w.bit_length() - 1]
        cand &= ~clique
        count += 1
    return count


def independence_number(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, list[int]]:
    """Exact independence number with the lexicographically least maximum set.

    Branch and bound over the lowest remaining candidate (include first), so
    leaves are met in lexicographic order; twins enter or leave together.
    """
    if g.n > cap:
        raise CapExceeded(f"independence_number: n={g.n} exceeds cap {cap}")
    rep = g.twin_classes()
    cls_mask = [0] * g.n
    for v, r in enumerate(rep):
        cls_mask[r] |= 1 << v

    best_size = -1
    best_set = 0

    def search(chosen: int, size: int, cand: int) -> None:
        nonlocal best_size, best_set
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(g, cand) <= best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        twins = cls_mask[rep[v]] & cand
        search(chosen | twins, size + twins.bit_count(), cand & ~twins & ~g.adj[v])
        search(chosen, size, cand & ~twins)

    search(0, 0, (1 << g.n) - 1)
    return best_size, bits(best_set)


def chromatic_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact chromatic number by iterative deepening over the colour count."""
    if g.n > cap:
        raise CapExceeded(f"chromatic_number: n={g.n} exceeds cap {cap}")
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(2, g.n + 1):
        if _colourable(g, order, k):
            return k
    return g.n


def _colourable(g: Graph, order: list[int], k: int) -> bool:
    colour = [-1] * g.n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then degree, then index
        best, best_key = -1, None
        for v in order:
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in bits(g.adj[v]) if colour[u] >= 0})
            key = (sat, g.degree(v))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def go(done: int, used: int) -> bool:
        if done == g.n:
            return True
        v = pick()
        taken = {colour[u] for u in bits(g.adj[v]) if colour[u] >= 0}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if go(done + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return go(0, 0)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    edges = [
        (i, j)
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph.from_edges(10, edges)


def named_graph(name: str, *params: int) -> Graph:
    """``named_graph("cycle", 7)``, ``named_graph("complete_bipartite", 3, 3)``, ``named_graph("petersen")``."""
    builders = {
        "cycle": cycle,
        "complete_bipartite": complete_bipartite,
        "complete": complete,
        "petersen": petersen,
    }
    try:
        return builders[name](*params)
    except KeyError:
        raise ValueError(f"unknown named graph {name!r}") from None
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {params}") from exc
