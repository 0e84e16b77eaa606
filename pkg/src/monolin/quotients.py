"""Colon sequences, linear quotients and Betti numbers read off from them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import ArgumentError, DomainError
from .ideal import MonomialIdeal, is_equigenerated
from .monomial import Monomial
from .table import BettiTable


@dataclass(frozen=True)
class OrderedGenerators:
    """A generator sequence together with its colon ideals.

    ``order`` holds 0-based indices into ``ideal.generators``;
    ``colon_gens[k]`` generates ``(g_0, ..., g_{k-1}) : g_k``.
    """

    ideal: MonomialIdeal
    order: tuple[int, ...]
    colon_gens: tuple[tuple[Monomial, ...], ...]

    @property
    def sequence(self) -> list[Monomial]:
        return [self.ideal.generators[i] for i in self.order]

    @property
    def r(self) -> list[int]:
        return [len(c) for c in self.colon_gens]

    def colon_ideal(self, k: int) -> MonomialIdeal:
        return MonomialIdeal(self.ideal.ring, self.colon_gens[k])

    @property
    def is_linear(self) -> bool:
        return all(g.degree == 1 for c in self.colon_gens for g in c)


def _resolve_order(I: MonomialIdeal, order) -> tuple[int, ...]:
    m = len(I.generators)
    if order is None:
        return tuple(range(m))
    order = list(order)
    if order and isinstance(order[0], Monomial):
        pos = {g: k for k, g in enumerate(I.generators)}
        try:
            idx = [pos[g] for g in order]
        except KeyError as e:
            raise ArgumentError(f"{e.args[0]} is not a minimal generator of {I}") from None
    else:
        idx = [int(k) for k in order]
    if sorted(idx) != list(range(m)):
        raise ArgumentError(f"{order} is not a permutation of the {m} generators")
    return tuple(idx)


def colon_sequence(I: MonomialIdeal, order=None) -> OrderedGenerators:
    """Colon ideals along ``order`` (indices or monomials; default: stored order)."""
    if I.is_zero():
        raise DomainError("colon sequence of the zero ideal")
    idx = _resolve_order(I, order)
    seq = [I.generators[i] for i in idx]
    colons = []
    for k, g in enumerate(seq):
        colons.append(MonomialIdeal(I.ring, (f / f.gcd(g) for f in seq[:k])).generators)
    return OrderedGenerators(I, idx, tuple(colons))


def _pairwise_linear(seq: Sequence[Monomial]) -> bool:
    # Witness form: for j < i there are k < i and a variable x_l with
    # u_k / gcd(u_k, u_i) = x_l and x_l dividing u_j / gcd(u_j, u_i).
    for i, ui in enumerate(seq):
        quots = [f / f.gcd(ui) for f in seq[:i]]
        linear_vars = {next(iter(q.support)) for q in quots if q.degree == 1}
        for q in quots:
            if not (q.support & linear_vars):
                return False
    return True


def has_linear_quotients(I: MonomialIdeal, order=None, method: str = "colon") -> bool:
    """Whether every colon ideal along ``order`` is generated by variables.

    ``method`` is ``"colon"`` (minimal colon generators all have degree 1),
    ``"pairwise"`` (witness search over generator pairs) or ``"both"``, which
    runs the two and raises if they ever disagree.
    """
    if method == "colon":
        return colon_sequence(I, order).is_linear
    if method == "pairwise":
        idx = _resolve_order(I, order)
        return _pairwise_linear([I.generators[i] for i in idx])
    if method == "both":
        a = has_linear_quotients(I, order, "colon")
        b = has_linear_quotients(I, order, "pairwise")
        if a != b:
            raise AssertionError(f"linear-quotient checks disagree on {I} with order {order}")
        return a
    raise ArgumentError(f"unknown method {method!r}")


def betti_from_quotients(og: OrderedGenerators) -> BettiTable:
    """``beta_i = sum_k C(r_k, i)`` in degree ``i + d``."""
    I = og.ideal
    if not is_equigenerated(I):
        raise DomainError("the quotient formula needs an equigenerated ideal")
    if not og.is_linear:
        raise DomainError("the quotient formula needs linear quotients")
    d = I.generators[0].degree
    r = og.r
    top = max(r)
    return BettiTable.linear([sum(comb(rk, i) for rk in r) for i in range(top + 1)], d)


@dataclass(frozen=True)
class OrderSearch:
    """Outcome of :func:`find_linear_quotient_order`.

    ``status`` is ``"found"``, ``"none"`` (exhaustively ruled out) or
    ``"inconclusive"`` (budget ran out).
    """

    status: str
    order: tuple[int, ...] | None
    expansions: int

    def __bool__(self):
        return self.status == "found"


def find_linear_quotient_order(I: MonomialIdeal, budget: int = 10**6) -> OrderSearch:
    """Lexicographically least index order with linear quotients, if any.

    Whether a generator can come next depends only on the set already
    placed, so dead sets are memoized and the DFS is exhaustive well beyond
    the sizes where plain permutation search is feasible.
    """
    if I.is_zero():
        raise DomainError("order search on the zero ideal")
    gens = I.generators
    m = len(gens)
    # supp[j][c]: variables dividing g_j / gcd(g_j, g_c), as a bitmask
    # lin[j][c]: bit of the variable if that quotient is a single variable
    supp = [[0] * m for _ in range(m)]
    lin = [[0] * m for _ in range(m)]
    for j in range(m):
        for c in range(m):
            if j == c:
                continue
            q = tuple(max(a - b, 0) for a, b in zip(gens[j].exps, gens[c].exps))
            mask = 0
            for v, a in enumerate(q):
                if a:
                    mask |= 1 << v
            supp[j][c] = mask
            if sum(q) == 1:
                lin[j][c] = mask

    def fits(placed: list[int], c: int) -> bool:
        vars_ = 0
        for k in placed:
            vars_ |= lin[k][c]
        return all(supp[j][c] & vars_ for j in placed)

    dead: set[int] = set()
    expansions = 0
    exhausted = False
    path: list[int] = []

    def dfs(state: int) -> bool:
        nonlocal expansions, exhausted
        if len(path) == m:
            return True
        if state in dead:
            return False
        for c in range(m):
            if state >> c & 1:
                continue
            expansions += 1
            if expansions > budget:
                exhausted = True
                return False
            if not fits(path, c):
                continue
            path.append(c)
            if dfs(state | 1 << c):
                return True
            path.pop()
            if exhausted:
                return False
        dead.add(state)
        return False

    if dfs(0):
        return OrderSearch("found", tuple(path), expansions)
    return OrderSearch("inconclusive" if exhausted else "none", None, expansions)
