"""Linearizations Lin(I) and LIN(I) of equigenerated monomial ideals."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

from .errors import ContextError, DomainError
from .ideal import (ExponentBound, MonomialIdeal, is_equigenerated, is_squarefree,
                    max_exponent_vector, power_complete, radical)
from .monomial import Monomial, RingContext, parse_monomial, rebase, render_monomial
from .quotients import OrderedGenerators, colon_sequence
from .table import BettiTable

LIN = "Lin"
STAR = "LIN"
POSITIONAL = "positional"
BY_MONOMIAL = "by-monomial"

_BRACKET_RE = re.compile(r"^y\[(.*)\]$")


@dataclass(frozen=True)
class LastGen:
    """``f_j * y_j / x_k`` with ``j`` and ``k`` as 0-based indices."""

    monomial: Monomial
    j: int
    k: int


@dataclass(frozen=True)
class Linearized:
    ideal: MonomialIdeal
    source: MonomialIdeal
    mode: str
    y_indexing: str
    complete: tuple[Monomial, ...]
    last: tuple[LastGen, ...]
    y_vars: tuple[int, ...]
    source_map: dict = field(compare=False)

    @property
    def ring(self) -> RingContext:
        return self.ideal.ring

    @property
    def degree(self) -> int:
        return self.source.generators[0].degree

    @property
    def sequence(self) -> list[Monomial]:
        """Generators in the canonical linear-quotient order."""
        return list(self.complete) + [g.monomial for g in self.last]

    @property
    def complete_part(self) -> range:
        return range(len(self.complete))

    @property
    def last_part(self) -> range:
        return range(len(self.complete), len(self.complete) + len(self.last))

    def to_json(self) -> dict:
        out = self.ideal.to_json()
        out["mode"] = self.mode
        out["y_indexing"] = self.y_indexing
        out["order"] = [list(g.exps) for g in self.sequence]
        out["complete_part"] = len(self.complete)
        out["source_map"] = {self.ring.variables[y]: render_monomial(f)
                             for y, f in self.source_map.items()}
        return out


def y_name(f: Monomial, j: int, y_indexing: str) -> str:
    if y_indexing == POSITIONAL:
        return f"y{j + 1}"
    if y_indexing == BY_MONOMIAL:
        return f"y[{render_monomial(f)}]"
    raise ContextError(f"unknown y indexing {y_indexing!r}")


def _check_input(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("cannot linearize the zero ideal")
    if I.is_unit():
        raise DomainError("cannot linearize the unit ideal")
    if not is_equigenerated(I):
        raise DomainError(f"{I} is not equigenerated; use lin_general for arbitrary ideals")
    ys = set(I.ring.indices("y"))
    if any(f.support & ys for f in I.generators):
        raise DomainError("generators must not involve y-tagged variables")


def linearize(I: MonomialIdeal, mode: str = LIN, y_indexing: str = POSITIONAL) -> Linearized:
    _check_input(I)
    if mode not in (LIN, STAR):
        raise ContextError(f"unknown mode {mode!r}")
    gens = I.generators
    d = gens[0].degree
    names = [y_name(f, j, y_indexing) for j, f in enumerate(gens)]
    clash = set(names) & set(I.ring.variables)
    if clash:
        raise ContextError(f"y-variable names {sorted(clash)} already used in the ring")
    ring = I.ring.extend(names, "y")
    n0 = I.ring.nvars
    ys = tuple(range(n0, n0 + len(gens)))
    xb = I.ring.x_block
    M = list(max_exponent_vector(I).bounds)
    if mode == STAR:
        top = max(M[i] for i in xb)
        M = [top if i in xb else 0 for i in range(n0)]
    bound = ExponentBound(ring, tuple(M) + (0,) * len(gens))
    complete = power_complete(ring, d, bound).generators

    last = []
    source_map = {}
    for j, f in enumerate(gens):
        fe = f.exps + (0,) * len(gens)
        source_map[ys[j]] = f
        for k in range(n0):
            if f.exps[k]:
                e = list(fe)
                e[k] -= 1
                e[ys[j]] = 1
                last.append(LastGen(Monomial(ring, tuple(e)), j, k))
    ideal = MonomialIdeal(ring, list(complete) + [g.monomial for g in last])
    if len(ideal) != len(complete) + len(last):
        raise AssertionError(f"linearization of {I} produced non-minimal generators")
    return Linearized(ideal, I, mode, y_indexing, tuple(complete), tuple(last), ys, source_map)


def lin(I: MonomialIdeal, y_indexing: str = POSITIONAL) -> Linearized:
    """``Lin(I)``: complete part bounded by the exponent vector ``(M_1..M_n)``."""
    return linearize(I, LIN, y_indexing)


def star_lin(I: MonomialIdeal, y_indexing: str = POSITIONAL) -> Linearized:
    """``LIN(I)``: complete part bounded by ``M = max M_i`` in every variable."""
    return linearize(I, STAR, y_indexing)


def canonical_order(L: Linearized) -> OrderedGenerators:
    """Complete part in decreasing lex, then ``f_j y_j / x_k`` by ``j`` then ``k``."""
    return colon_sequence(L.ideal, L.sequence)


def retrieve_source(L: Linearized | MonomialIdeal) -> MonomialIdeal:
    """Recover ``I`` from its linearization using only the generators.

    A ``y_j`` occurring in several last-part generators gives ``f_j`` as the
    lcm of their x-parts.  A ``y_j`` occurring once means ``f_j`` is a pure
    power ``x_k^d`` and the x-part is ``x_k^(d-1)``.
    """
    J = L.ideal if isinstance(L, Linearized) else L
    ring = J.ring
    ys = ring.indices("y")
    if not ys:
        raise DomainError("no y-variables: not a linearization")
    base = ring.drop(ys)
    parts: dict[int, list[Monomial]] = {y: [] for y in ys}
    complete = []
    for g in J.generators:
        hit = [y for y in ys if g.exps[y]]
        if not hit:
            complete.append(rebase_drop(g, base, ys))
            continue
        if len(hit) > 1 or g.exps[hit[0]] != 1:
            raise DomainError(f"{g} is not a well-formed last-part generator")
        e = list(g.exps)
        e[hit[0]] = 0
        parts[hit[0]].append(rebase_drop(Monomial(ring, tuple(e)), base, ys))
    missing = [ring.variables[y] for y, p in parts.items() if not p]
    if missing:
        raise DomainError(f"y-variables {missing} do not occur in any generator")
    degs = {g.degree for g in J.generators}
    if len(degs) != 1:
        raise DomainError("a linearization is equigenerated")
    d = degs.pop()
    if d == 1:
        return _retrieve_linear(ring, ys, base, complete)
    out = []
    for y in ys:
        xs = parts[y]
        if len(xs) == 1:
            (k,) = xs[0].support
            out.append(xs[0] * base.var(k))
        else:
            f = xs[0]
            for p in xs[1:]:
                f = f.lcm(p)
            out.append(f)
    result = MonomialIdeal(base, out)
    if len(result) != len(ys):
        raise DomainError("retrieved generators are not minimal")
    return result


def rebase_drop(u: Monomial, base: RingContext, dropped) -> Monomial:
    gone = set(dropped)
    return Monomial(base, tuple(a for i, a in enumerate(u.exps) if i not in gone))


def _retrieve_linear(ring, ys, base, complete):
    # In degree 1 every last-part generator is a bare y_j, so the sources
    # must come from the variable names or, for Lin, from the complete part.
    named = [_BRACKET_RE.match(ring.variables[y]) for y in ys]
    if all(named):
        return MonomialIdeal(base, [parse_monomial(m.group(1), base) for m in named])
    if len(complete) == len(ys):
        return MonomialIdeal(base, complete)
    raise DomainError("degree-1 LIN with positional y-variables does not determine its source")


def is_polymatroidal(J: MonomialIdeal) -> bool:
    """Exchange property: ``a_i(u) > a_i(v)`` forces some ``j`` with
    ``a_j(u) < a_j(v)`` and ``u x_j / x_i`` in ``G(J)``."""
    if not is_equigenerated(J):
        raise DomainError("polymatroidality is defined for equigenerated ideals")
    gens = set(g.exps for g in J.generators)
    n = J.ring.nvars
    for u in gens:
        for v in gens:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gens:
                            ok = True
                            break
                if not ok:
                    return False
    return True


@dataclass(frozen=True)
class RadicalStarLin:
    """``sqrt(LIN(I))`` with ``d = a*M + b`` and the pathological pairs ``(j, k)``."""

    ideal: MonomialIdeal
    a: int
    b: int
    M: int
    n: int
    pathological: tuple[tuple[int, int], ...]
    sequence: tuple[Monomial, ...]

    @property
    def p(self) -> int:
        return len(self.pathological)

    @property
    def s(self) -> int:
        return 1 if self.b else 0


def _radical_setup(I: MonomialIdeal):
    _check_input(I)
    xb = I.ring.x_block
    d = I.generators[0].degree
    M = max(max_exponent_vector(I).bounds[i] for i in xb)
    if is_squarefree(I) or M < 2:
        raise DomainError("the radical analysis assumes M >= 2; squarefree ideals are handled separately")
    a, b = divmod(d, M)
    if a < 1:
        raise DomainError(f"the radical analysis assumes a >= 1, got d={d}, M={M}")
    return xb, d, M, a, b


def _pathological(I: MonomialIdeal, M: int) -> list[tuple[int, int]]:
    out = []
    for j, f in enumerate(I.generators):
        ones = [k for k in f.support if f.exps[k] == 1]
        if len(ones) == 1 and all(f.exps[k] == M for k in f.support if k != ones[0]):
            out.append((j, ones[0]))
    return out


def radical_star_lin(I: MonomialIdeal) -> RadicalStarLin:
    """Closed description of ``sqrt(LIN(I))``: the squarefree monomials of
    degree ``a + sign(b)`` plus ``sqrt(f_j / x_k) y_j`` for pathological
    generators (one exponent 1, every other exponent equal to ``M``)."""
    xb, d, M, a, b = _radical_setup(I)
    s = 1 if b else 0
    L = star_lin(I)
    ring = L.ring
    sq = power_complete(ring, a + s, ExponentBound(ring, tuple(1 if i in xb else 0 for i in range(ring.nvars))))
    path = _pathological(I, M)
    extra = []
    for j, k in path:
        f = I.generators[j]
        e = list((f / I.ring.var(k)).radical.exps) + [0] * len(L.y_vars)
        e[L.y_vars[j]] = 1
        extra.append(Monomial(ring, tuple(e)))
    ideal = MonomialIdeal(ring, list(sq.generators) + extra)
    return RadicalStarLin(ideal, a, b, M, len(xb), tuple(path), tuple(sq.generators) + tuple(extra))


def radical_star_lin_betti(I: MonomialIdeal) -> BettiTable:
    """``beta_i = C(i+c-1, c-1) C(n, i+c) + sum_l C(n-a+t_l, i)``, ``c = a + sign(b)``,
    where ``t_l`` counts earlier pathological pairs with the same ``f/x``."""
    R = radical_star_lin(I)
    c = R.a + R.s
    quots = [I.generators[j] / I.ring.var(k) for j, k in R.pathological]
    t = [sum(1 for q in quots[:l] if q == quots[l]) for l in range(len(quots))]
    betas = []
    i = 0
    while True:
        v = comb(i + c - 1, c - 1) * comb(R.n, i + c) + sum(comb(R.n - R.a + tl, i) for tl in t)
        if v == 0:
            break
        betas.append(v)
        i += 1
    return BettiTable.linear(betas, c)


def radical_star_lin_order(I: MonomialIdeal) -> OrderedGenerators:
    """Squarefree part in decreasing lex, then the pathological generators by ``j``."""
    R = radical_star_lin(I)
    return colon_sequence(R.ideal, list(R.sequence))


def _common(L1: Linearized, target: Linearized) -> MonomialIdeal:
    return MonomialIdeal(target.ring, (rebase(g, target.ring) for g in L1.ideal.generators))


@dataclass(frozen=True)
class SumCompatibility:
    lin_inclusion: bool
    star_inclusion: bool
    lin_equal: bool
    star_equal: bool

    def __bool__(self):
        return self.lin_inclusion and self.star_inclusion


def sum_compatibility_check(I: MonomialIdeal, J: MonomialIdeal) -> SumCompatibility:
    """Compare ``Lin(I) + Lin(J)`` with ``Lin(I + J)`` (and likewise LIN)
    using by-monomial y-variables so all three live in one ring."""
    if I.ring != J.ring:
        raise ContextError("ideals from different rings")
    for K in (I, J):
        _check_input(K)
    if I.generators[0].degree != J.generators[0].degree:
        raise DomainError("sum compatibility needs ideals of the same degree")
    S = I + J
    out = []
    for mode in (LIN, STAR):
        big = linearize(S, mode, BY_MONOMIAL)
        part = _common(linearize(I, mode, BY_MONOMIAL), big) + _common(linearize(J, mode, BY_MONOMIAL), big)
        included = all(any(h.divides(g) for h in big.ideal.generators) for g in part.generators)
        out.append((included, part == big.ideal))
    return SumCompatibility(out[0][0], out[1][0], out[0][1], out[1][1])
