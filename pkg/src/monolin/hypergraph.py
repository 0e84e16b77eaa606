"""Hypergraphs, edge ideals and the diameter criterion for linear resolutions.

Vertices are 1-based; vertex ``i`` corresponds to the ``i``-th ring variable.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, ParseError, ResourceError
from .ideal import MonomialIdeal, is_squarefree
from .monomial import Monomial, RingContext

INF = math.inf
TRIANGULATED_CAP = 16


class Verdict(enum.Enum):
    LINEAR = "linear"
    NOT_LINEAR = "not linear"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Criterion:
    verdict: Verdict
    reason: str = ""
    diameter: float | None = None


class Hypergraph:
    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        es = []
        for E in edges:
            E = frozenset(int(v) for v in E)
            if not E:
                raise DomainError("edges must be nonempty")
            if min(E) < 1 or max(E) > n:
                raise DomainError(f"edge {sorted(E)} is outside the vertex set 1..{n}")
            es.append(E)
        self.n = n
        self.edges: tuple[frozenset, ...] = tuple(sorted(set(es), key=lambda E: (len(E), sorted(E))))
        sizes = {len(E) for E in self.edges}
        self.d: int | None = sizes.pop() if len(sizes) == 1 else None

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"Hypergraph({self.n}, {[sorted(E) for E in self.edges]})"

    @property
    def is_uniform(self) -> bool:
        return self.d is not None

    def _need_uniform(self):
        if self.d is None:
            raise DomainError("the hypergraph is not uniform")

    def induced(self, W) -> "Hypergraph":
        W = frozenset(W)
        return Hypergraph(self.n, [E for E in self.edges if E <= W])

    def neighbours(self, v: int) -> set[int]:
        out = set()
        for E in self.edges:
            if v in E:
                out |= E
        out.discard(v)
        return out

    @cached_property
    def _adjacency(self) -> list[list[int]]:
        self._need_uniform()
        m = len(self.edges)
        adj = [[] for _ in range(m)]
        for a, b in itertools.combinations(range(m), 2):
            if len(self.edges[a] & self.edges[b]) == self.d - 1 and self.d > 1:
                adj[a].append(b)
                adj[b].append(a)
        return adj

    def _has_sdr(self, path: list[int]) -> bool:
        # distinct vertices v_k in E_{k-1} & E_k, by augmenting paths
        sets = [self.edges[a] & self.edges[b] for a, b in zip(path, path[1:])]
        owner: dict[int, int] = {}

        def augment(k, seen):
            for v in sets[k]:
                if v in seen:
                    continue
                seen.add(v)
                if v not in owner or augment(owner[v], seen):
                    owner[v] = k
                    return True
            return False

        return all(augment(k, set()) for k in range(len(sets)))

    def distance(self, E, F, budget: int = 200000) -> float:
        """Length of a shortest proper chain from ``E`` to ``F``.

        A proper chain needs distinct edges, consecutive intersections of
        size ``d - 1`` and pairwise distinct connecting vertices.  A shortest
        one is automatically irredundant.  BFS on the proper-adjacency graph
        gives a lower bound; simple paths are then searched by increasing
        length until one admits distinct connecting vertices.
        """
        self._need_uniform()
        idx = {e: k for k, e in enumerate(self.edges)}
        try:
            s, t = idx[frozenset(E)], idx[frozenset(F)]
        except KeyError:
            raise DomainError("distance is defined between edges of the hypergraph") from None
        if s == t:
            return 0
        adj = self._adjacency
        dist = {s: 0}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if t not in dist:
            return INF
        back = {}
        queue = deque([t])
        back[t] = 0
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in back:
                    back[b] = back[a] + 1
                    queue.append(b)
        work = 0
        for length in range(dist[t], len(self.edges)):
            path = [s]

            def dfs():
                nonlocal work
                work += 1
                if work > budget:
                    raise ResourceError("proper-chain search exceeded its budget")
                a = path[-1]
                left = length - (len(path) - 1)
                if a == t:
                    return left == 0 and self._has_sdr(path)
                if left == 0 or back.get(a, INF) > left:
                    return False
                for b in adj[a]:
                    if b in path:
                        continue
                    path.append(b)
                    if self._has_sdr(path) and dfs():
                        return True
                    path.pop()
                return False

            if dfs():
                return length
        return INF

    def is_properly_connected(self) -> bool:
        self._need_uniform()
        for E, F in itertools.combinations(self.edges, 2):
            k = len(E & F)
            if k and self.distance(E, F) != self.d - k:
                return False
        return True

    def is_triangulated(self, cap: int = TRIANGULATED_CAP) -> bool:
        """Every nonempty vertex set ``W`` has a vertex whose closed
        neighbourhood in ``H_W`` spans a complete ``d``-uniform hypergraph."""
        self._need_uniform()
        if self.n > cap:
            raise ResourceError(f"triangulation check enumerates 2^{self.n} subsets; cap is n <= {cap}")
        d = self.d
        edges = set(self.edges)
        for size in range(1, self.n + 1):
            for W in itertools.combinations(range(1, self.n + 1), size):
                Ws = frozenset(W)
                inner = [E for E in self.edges if E <= Ws]
                ok = False
                for v in W:
                    nb = set()
                    for E in inner:
                        if v in E:
                            nb |= E
                    nb.add(v)
                    if all(frozenset(S) in edges for S in itertools.combinations(sorted(nb), d)):
                        ok = True
                        break
                if not ok:
                    return False
        return True

    def diameter(self) -> float:
        self._need_uniform()
        best = 0
        for E, F in itertools.combinations(self.edges, 2):
            best = max(best, self.distance(E, F))
            if best == INF:
                return INF
        return best

    def to_text(self) -> str:
        return "".join(" ".join(str(v) for v in sorted(E)) + "\n" for E in self.edges)

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "Hypergraph":
        edges = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                edges.append([int(t) for t in line.split()])
            except ValueError:
                raise ParseError(f"line {lineno}: expected vertex numbers", line, 0) from None
        if n is None:
            n = max((max(E) for E in edges), default=0)
        return cls(n, edges)

    def adjacency_dot(self) -> str:
        lines = ["graph proper_adjacency {"]
        for k, E in enumerate(self.edges):
            lines.append(f'  e{k} [label="{{{",".join(map(str, sorted(E)))}}}"];')
        if self.d:
            for a, nbrs in enumerate(self._adjacency):
                for b in nbrs:
                    if a < b:
                        lines.append(f"  e{a} -- e{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def edge_ideal(H: Hypergraph, ring: RingContext | None = None) -> MonomialIdeal:
    if ring is None:
        ring = RingContext(tuple(f"x{i}" for i in range(1, H.n + 1)))
    if ring.nvars != H.n:
        raise DomainError("ring size must equal the number of vertices")
    gens = []
    for E in H.edges:
        e = [0] * H.n
        for v in E:
            e[v - 1] = 1
        gens.append(Monomial(ring, tuple(e)))
    return MonomialIdeal(ring, gens)


def from_ideal(I: MonomialIdeal) -> Hypergraph:
    if not is_squarefree(I):
        raise DomainError(f"{I} is not squarefree")
    return Hypergraph(I.ring.nvars, [[v + 1 for v in f.support] for f in I.generators])


def linear_resolution_criterion(H: Hypergraph) -> Criterion:
    """``diam(H) <= d`` for uniform, properly-connected, triangulated ``H``.

    Degree-1 hypergraphs are reported inapplicable: their edges never meet,
    so every pair is at infinite distance although ``(x_1, ..., x_k)`` has a
    linear resolution.
    """
    if not H.edges:
        return Criterion(Verdict.INAPPLICABLE, "no edges")
    if not H.is_uniform:
        return Criterion(Verdict.INAPPLICABLE, "not uniform")
    if H.d == 1:
        return Criterion(Verdict.INAPPLICABLE, "1-uniform")
    if not H.is_properly_connected():
        return Criterion(Verdict.INAPPLICABLE, "not properly-connected")
    if not H.is_triangulated():
        return Criterion(Verdict.INAPPLICABLE, "not triangulated")
    diam = H.diameter()
    return Criterion(Verdict.LINEAR if diam <= H.d else Verdict.NOT_LINEAR, "", diam)


def cycle(n: int) -> Hypergraph:
    return Hypergraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_uniform(n: int, d: int) -> Hypergraph:
    return Hypergraph(n, itertools.combinations(range(1, n + 1), d))
