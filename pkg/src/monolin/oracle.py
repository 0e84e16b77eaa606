"""Betti numbers from simplicial homology, independent of every closed form.

For ``b`` in the lcm-lattice, ``beta_{i,b}(I)`` is the dimension of the
reduced homology in degree ``i - 1`` of the upper Koszul complex
``K^b = {squarefree tau : x^(b - tau) in I}``.  Multidegrees outside the
lattice contribute nothing, so only lattice elements are visited.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass, field

from . import kernels
from .errors import ArgumentError, DomainError
from .ideal import MonomialIdeal, intersection, is_equigenerated
from .lattice import lcm_closure
from .monomial import Monomial
from .table import BettiTable


@dataclass(frozen=True)
class MultigradedBetti:
    """``(i, multidegree) -> beta``; multidegrees are exponent tuples."""

    ideal: MonomialIdeal
    entries: dict = field(default_factory=dict)

    def graded(self) -> BettiTable:
        out = defaultdict(int)
        for (i, b), v in self.entries.items():
            out[(i, sum(b))] += v
        return BettiTable(out)

    def at(self, i: int, b: Monomial) -> int:
        return self.entries.get((i, b.exps), 0)

    def euler(self) -> dict:
        """``sum_i (-1)^i beta_{i,b}`` for every multidegree present."""
        out = defaultdict(int)
        for (i, b), v in self.entries.items():
            out[b] += (-1) ** i * v
        return {b: v for b, v in out.items() if v}


def oracle_multigraded(I: MonomialIdeal, cap: int | None = None,
                       prime: int | None = None) -> MultigradedBetti:
    if I.is_zero():
        raise DomainError("the zero ideal has no resolution")
    if prime is not None:
        warnings.warn(f"Betti numbers computed modulo {prime} agree with the rational "
                      "ones only when the prime does not divide any torsion", stacklevel=2)
    gens = [g.exps for g in I.generators]
    entries = {}
    for b in sorted(lcm_closure(gens, cap)):
        if not any(b):
            continue
        below = [g for g in gens if all(x <= y for x, y in zip(g, b))]
        for i, v in enumerate(kernels.multidegree_betti(b, below, prime)):
            if v:
                entries[(i, b)] = v
    return MultigradedBetti(I, entries)


def oracle_betti(I: MonomialIdeal, cap: int | None = None,
                 prime: int | None = None) -> tuple[MultigradedBetti, BettiTable]:
    """Multigraded and graded Betti numbers of ``I`` (as a module, ``beta_0 = m``)."""
    mb = oracle_multigraded(I, cap, prime)
    return mb, mb.graded()


def oracle_table(I: MonomialIdeal, cap: int | None = None) -> BettiTable:
    return oracle_betti(I, cap)[1]


def is_linear_resolution(I: MonomialIdeal, cap: int | None = None) -> bool:
    """Whether the graded Betti numbers of ``I`` all sit in row ``d``."""
    if not is_equigenerated(I):
        raise DomainError("linear resolution is defined here for equigenerated ideals")
    d = I.generators[0].degree
    return all(j - i == d for i, j in oracle_table(I, cap).entries)


def taylor_euler(I: MonomialIdeal) -> dict:
    """``sum over nonempty S with lcm(S) = b of (-1)^(|S|-1)``, per ``b``.

    Expands ``prod_g (1 - t_g)`` with monomials multiplied by lcm, so the
    Taylor complex is never listed subset by subset.
    """
    gens = [g.exps for g in I.generators]
    n = I.ring.nvars
    acc = {(0,) * n: 1}
    for g in gens:
        nxt = dict(acc)
        for l, c in acc.items():
            key = tuple(map(max, l, g))
            nxt[key] = nxt.get(key, 0) - c
        acc = nxt
    return {b: -c for b, c in acc.items() if c and any(b)}


@dataclass(frozen=True)
class SplittingReport:
    I: BettiTable
    J: BettiTable
    K: BettiTable
    JK: BettiTable
    mismatches: tuple

    def __bool__(self):
        return not self.mismatches

    def predicted(self, i: int, j: int) -> int:
        return self.J[(i, j)] + self.K[(i, j)] + self.JK[(i - 1, j)]


def betti_splitting_check(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                          cap: int | None = None) -> SplittingReport:
    """Test ``beta_ij(I) = beta_ij(J) + beta_ij(K) + beta_{i-1,j}(J cap K)``."""
    gi, gj, gk = set(I.generators), set(J.generators), set(K.generators)
    if gj & gk or gj | gk != gi:
        raise ArgumentError("G(I) must be the disjoint union of G(J) and G(K)")
    tI, tJ, tK = (oracle_table(X, cap) for X in (I, J, K))
    tJK = oracle_table(intersection(J, K), cap)
    report = SplittingReport(tI, tJ, tK, tJK, ())
    cells = set(tI.entries) | set(tJ.entries) | set(tK.entries) | {(i + 1, j) for i, j in tJK.entries}
    bad = tuple(sorted((i, j, tI[(i, j)], report.predicted(i, j))
                       for i, j in cells if tI[(i, j)] != report.predicted(i, j)))
    return SplittingReport(tI, tJ, tK, tJK, bad)
