"""lcm-lattices of monomial ideals."""

from __future__ import annotations

import os
from functools import cached_property

from .errors import DomainError, ResourceError
from .ideal import MonomialIdeal
from .monomial import Monomial, RingContext, render_monomial

DEFAULT_LATTICE_CAP = 20000


def lattice_cap() -> int:
    raw = os.environ.get("MONOLIN_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_LATTICE_CAP


def lcm_closure(gens, cap: int | None = None) -> set[tuple[int, ...]]:
    """Exponent vectors of all subset lcms, the empty subset giving 1."""
    gens = [tuple(g) for g in gens]
    cap = lattice_cap() if cap is None else cap
    n = len(gens[0]) if gens else 0
    L = {(0,) * n}
    for g in gens:
        L |= {tuple(map(max, l, g)) for l in L}
        if len(L) > cap:
            raise ResourceError(f"lcm-lattice exceeds {cap} elements (raise MONOLIN_ORACLE_CAP to allow more)")
    return L


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class LcmLattice:
    """Subset lcms of ``G(I)`` ordered by divisibility."""

    def __init__(self, I: MonomialIdeal, cap: int | None = None):
        if I.is_zero():
            raise DomainError("the zero ideal has no lcm-lattice")
        self.ideal = I
        self.ring: RingContext = I.ring
        vecs = lcm_closure((g.exps for g in I.generators), cap)
        vecs = sorted(vecs, key=lambda e: (sum(e), tuple(-a for a in e)))
        self.elements: list[Monomial] = [Monomial(self.ring, e) for e in vecs]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, u: Monomial):
        return u in set(self.elements)

    @property
    def bottom(self) -> Monomial:
        return self.elements[0]

    @property
    def top(self) -> Monomial:
        return self.elements[-1]

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram as index pairs ``(lower, upper)``."""
        ex = [e.exps for e in self.elements]
        n = len(ex)
        up = [[j for j in range(n) if j != i and _divides(ex[i], ex[j])] for i in range(n)]
        out = []
        for i in range(n):
            above = set(up[i])
            for j in up[i]:
                if not any(k in above and j in up[k] for k in up[i] if k != j):
                    out.append((i, j))
        return out

    def join(self, u: Monomial, v: Monomial) -> Monomial:
        return u.lcm(v)

    def to_dot(self, name: str = "lcm_lattice") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, e in enumerate(self.elements):
            lines.append(f'  n{i} [label="{render_monomial(e)}"];')
        for a, b in self.covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
