"""Closed forms for LIN of squarefree equigenerated ideals.

Notation: ``n`` counts the original variables, ``d`` the common degree,
``m`` the generators.  A ``(d-1)``-edge is a squarefree degree ``d-1``
divisor of some generator and its multiplicity is the number of generators
it divides.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import DomainError
from .ideal import MonomialIdeal, is_equigenerated, is_squarefree
from .monomial import Monomial, render_monomial
from .table import BettiTable


@dataclass(frozen=True)
class ClusterProfile:
    edges: dict
    C: dict
    N: int
    m: int
    d: int
    n: int

    @property
    def excess(self) -> int:
        """``sum_{j>=2} (j-1) C_j``."""
        return sum((j - 1) * c for j, c in self.C.items())

    def to_json(self) -> dict:
        return {
            "n": self.n, "d": self.d, "m": self.m, "N": self.N,
            "C": {str(j): c for j, c in sorted(self.C.items())},
            "edges": {render_monomial(u): k for u, k in sorted(self.edges.items(), key=lambda t: t[0].exps, reverse=True)},
        }


def _check(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("the zero ideal has no cluster data")
    if not is_squarefree(I):
        raise DomainError(f"{I} is not squarefree")
    if not is_equigenerated(I):
        raise DomainError(f"{I} is not equigenerated")
    if I.is_unit():
        raise DomainError("the unit ideal has no cluster data")


def cluster_profile(I: MonomialIdeal) -> ClusterProfile:
    """Edges with multiplicities and the cluster counts ``C_j`` (``j >= 2``).

    A maximal j-cluster with j >= 2 shares exactly one (d-1)-edge, namely the
    gcd of its members, so maximal clusters correspond one-to-one to edges of
    multiplicity exactly j.  For d = 1 the only edge is the constant 1, which
    divides all m generators.
    """
    _check(I)
    d = I.generators[0].degree
    n = len(I.ring.x_block)
    edges: Counter = Counter()
    for f in I.generators:
        for k in f.support:
            edges[f / I.ring.var(k)] += 1
    C = Counter(mult for mult in edges.values() if mult >= 2)
    N = max(C, default=1)
    return ClusterProfile(dict(edges), dict(C), N, len(I), d, n)


def betti_closed_form(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of ``LIN(I)`` for squarefree equigenerated ``I``."""
    P = cluster_profile(I)
    n, d, m = P.n, P.d, P.m
    singles = m * d - P.excess
    betas = []
    for i in range(n + m + 1):
        v = veronese_betti(n, d, i) + comb(n - d + 1, i) * singles
        v += sum(c * sum(comb(n - d + k, i) for k in range(2, j + 1)) for j, c in P.C.items())
        if v == 0:
            break
        betas.append(v)
    return BettiTable.linear(betas, d)


def pd_and_depth(I: MonomialIdeal) -> tuple[int, int]:
    """``(pd(LIN(I)), depth(R/LIN(I)))`` with ``R`` in ``n + m`` variables.

    The second number is the depth of the quotient ring, ``m + d - N - 1``.
    """
    P = cluster_profile(I)
    return P.n - P.d + P.N, P.m + P.d - P.N - 1


def last_part_rk_census(I: MonomialIdeal) -> list[int]:
    """Predicted sorted ``r_k`` values of the last part of ``LIN(I)``."""
    P = cluster_profile(I)
    base = P.n - P.d
    out = [base + 1] * (P.m * P.d - P.excess)
    for j, c in P.C.items():
        for _ in range(c):
            out.extend(base + k for k in range(2, j + 1))
    return sorted(out)


def veronese_betti(n: int, d: int, i: int) -> int:
    """``beta_i`` of the squarefree Veronese ``(x_1..x_n)^d_sqf``."""
    if d > n or d < 1:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")
    if i < 0:
        return 0
    return comb(i + d - 1, d - 1) * comb(n, i + d)


def veronese_totals(n: int, d: int) -> list[int]:
    return [veronese_betti(n, d, i) for i in range(n - d + 1)]


def complete_part_rk_histogram(n: int, d: int) -> dict[int, int]:
    """``r -> C(r+d-1, d-1)`` for ``r = 0..n-d``."""
    if d > n or d < 1:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")
    return {r: comb(r + d - 1, d - 1) for r in range(n - d + 1)}


def squarefree_rk(u: Monomial) -> int:
    """``r_k = max(m_k) - d`` for a squarefree monomial with 1-based support ``m_k``."""
    return max(u.support) + 1 - u.degree


def squarefree_veronese_exponents(n: int, d: int):
    """Exponent vectors of ``(x_1..x_n)^d_sqf`` in decreasing lex."""
    for combo in itertools.combinations(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] = 1
        yield tuple(e)
