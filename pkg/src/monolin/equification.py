"""Equification ``f_j -> f_j z^(d - d_j)``, syzygy redundancy, Lin for
arbitrary ideals, lattice comparison and a rooted complex for ``I^eq``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, ContextError, DomainError, ResourceError
from .ideal import ExponentBound, MonomialIdeal, max_exponent_vector, power_complete
from .lattice import LcmLattice, lcm_closure
from .linearization import LIN, POSITIONAL, Linearized, linearize, y_name
from .monomial import Monomial, RingContext


def _z_ring(ring: RingContext, name: str | None = None) -> tuple[RingContext, int]:
    if ring.z_index is not None:
        raise ContextError("the ring already has a z-tagged variable")
    if name is None:
        name = next(c for c in ["z"] + [f"z{i}" for i in range(ring.nvars + 1)] if c not in ring.variables)
    elif name in ring.variables:
        raise ContextError(f"variable name {name!r} is already in use")
    ys = ring.indices("y")
    pos = ys[0] if ys else ring.nvars
    names = ring.variables[:pos] + (name,) + ring.variables[pos:]
    roles = ring.roles[:pos] + ("z",) + ring.roles[pos:]
    return RingContext(names, roles), pos


def lift(u: Monomial, ring: RingContext, pos: int, zexp: int = 0) -> Monomial:
    e = u.exps[:pos] + (zexp,) + u.exps[pos:]
    return Monomial(ring, e)


def equify(I: MonomialIdeal, z_name: str | None = None) -> MonomialIdeal:
    """``I^eq`` in the ring with ``z`` inserted after the x-variables.

    The new variable is called ``z`` unless that name is taken.
    """
    if I.is_zero():
        raise DomainError("cannot equify the zero ideal")
    ring, pos = _z_ring(I.ring, z_name)
    d = max(I.degrees())
    gens = [lift(f, ring, pos, d - f.degree) for f in I.generators]
    J = MonomialIdeal(ring, gens)
    # minimality is preserved: if f_i z^a divided f_j z^b then f_i | f_j
    if len(J) != len(gens):
        raise AssertionError(f"equification of {I} lost a generator")
    return J


def set_z_one(J: MonomialIdeal) -> MonomialIdeal:
    """Drop the z coordinate and minimalize."""
    z = J.ring.z_index
    if z is None:
        return J
    base = J.ring.drop([z])
    return MonomialIdeal(base, (Monomial(base, f.exps[:z] + f.exps[z + 1:]) for f in J.generators))


def deequify(J: MonomialIdeal) -> MonomialIdeal:
    """Recover ``I`` from ``I^eq`` by setting ``z = 1``."""
    return set_z_one(J)


def _bar(e: tuple, z: int) -> tuple:
    return e[:z] + e[z + 1:]


@dataclass(frozen=True)
class SyzygyPair:
    i: int
    j: int
    lcm_ij: Monomial
    redundant: bool
    witness: int | None


def _gens(I) -> Sequence[Monomial]:
    return I.generators if isinstance(I, MonomialIdeal) else list(I)


def _syzygy(gens, i, j, eq):
    m = len(gens)
    if i == j or not (0 <= i < m and 0 <= j < m):
        raise ArgumentError(f"need two distinct generator indices below {m}, got {i}, {j}")
    fi, fj = gens[i], gens[j]
    L = fi.lcm(fj)
    low = min(fi.degree, fj.degree)
    for k in range(m):
        if k in (i, j):
            continue
        fk = gens[k]
        if fk.lcm(fi).divides(L) and fk.lcm(fj).divides(L) and (not eq or low <= fk.degree):
            return SyzygyPair(i, j, L, True, k)
    return SyzygyPair(i, j, L, False, None)


def syzygy_redundant(I, i: int, j: int) -> SyzygyPair:
    """Whether ``sigma_ij`` is redundant: some ``k`` with ``lcm(f_k, f_i)`` and
    ``lcm(f_k, f_j)`` both dividing ``lcm(f_i, f_j)``.  ``I`` may be an ideal
    or an explicit generator list; indices are 0-based into it."""
    return _syzygy(_gens(I), i, j, False)


def syzygy_redundant_eq(I, i: int, j: int) -> SyzygyPair:
    """The same question for ``sigma^eq_ij``, answered from ``I``: the witness
    must also satisfy ``min(d_i, d_j) <= d_k``."""
    return _syzygy(_gens(I), i, j, True)


def lin_general(I: MonomialIdeal, mode: str = LIN, y_indexing: str = POSITIONAL) -> Linearized:
    """``Lin(I) := Lin(I^eq)`` with ``z`` as the last x-type variable."""
    return linearize(equify(I), mode, y_indexing)


def lin_general_z1(I: MonomialIdeal, y_indexing: str = POSITIONAL) -> MonomialIdeal:
    """Closed form of ``Lin(I^eq)`` at ``z = 1``:
    ``(x)^delta_{<=v} + (f_j y_j / x_k : d_j = delta)``."""
    if I.is_zero():
        raise DomainError("cannot linearize the zero ideal")
    gens = I.generators
    names = [y_name(f, j, y_indexing) for j, f in enumerate(gens)]
    ring = I.ring.extend(names, "y")
    n0 = I.ring.nvars
    delta = min(I.degrees())
    v = ExponentBound(ring, max_exponent_vector(I).bounds + (0,) * len(gens))
    out = list(power_complete(ring, delta, v).generators)
    for j, f in enumerate(gens):
        if f.degree != delta:
            continue
        for k in f.support:
            e = list(f.exps) + [0] * len(gens)
            e[k] -= 1
            e[n0 + j] = 1
            out.append(Monomial(ring, tuple(e)))
    return MonomialIdeal(ring, out)


def lin_general_at_z1(I: MonomialIdeal, y_indexing: str = POSITIONAL) -> MonomialIdeal:
    """``Lin(I^eq)`` evaluated at ``z = 1`` by direct substitution."""
    return set_z_one(lin_general(I, LIN, y_indexing).ideal)


def lcm_lattice(I: MonomialIdeal, cap: int | None = None) -> LcmLattice:
    return LcmLattice(I, cap)


@dataclass(frozen=True)
class EmbeddingReport:
    """``z = 1`` maps ``L_{I^eq}`` onto ``L_I`` and commutes with subset lcms."""

    size_I: int
    size_eq: int
    surjective: bool
    commutes: bool
    subsets_checked: int

    def __bool__(self):
        return self.surjective and self.commutes


def lattice_embedding_check(I: MonomialIdeal, max_subsets: int = 1 << 16) -> EmbeddingReport:
    J = equify(I)
    z = J.ring.z_index
    LI = lcm_closure(g.exps for g in I.generators)
    LJ = lcm_closure(g.exps for g in J.generators)
    image = {_bar(e, z) for e in LJ}
    m = len(I)
    if 1 << m > max_subsets:
        raise ResourceError(f"{m} generators give too many subsets to compare")
    n, nz = I.ring.nvars, J.ring.nvars
    ok = True
    count = 0
    for mask in range(1 << m):
        a, b = (0,) * n, (0,) * nz
        for t in range(m):
            if mask >> t & 1:
                a = tuple(map(max, a, I.generators[t].exps))
                b = tuple(map(max, b, J.generators[t].exps))
        count += 1
        if _bar(b, z) != a:
            ok = False
            break
    return EmbeddingReport(len(LI), len(LJ), image == LI, ok, count)


@dataclass(frozen=True)
class RootedComplex:
    """Rooted subsets (0-based generator indices) and the rooting map used.

    ``priority`` lists generator indices from first to last choice; the
    root of a lattice element is the first generator in that list dividing it.
    """

    ideal: MonomialIdeal
    priority: tuple[int, ...]
    faces: tuple[frozenset, ...]

    def f_vector(self) -> list[int]:
        """Number of faces of each size ``1, 2, ...`` (the empty face excluded)."""
        top = max((len(F) for F in self.faces), default=0)
        return [sum(1 for F in self.faces if len(F) == s) for s in range(1, top + 1)]


def rooting_priority(J: MonomialIdeal) -> tuple[int, ...]:
    """Generators of highest z-degree first, ties broken by decreasing lex."""
    z = J.ring.z_index
    return tuple(sorted(range(len(J)), key=lambda k: (-J.generators[k].exps[z], k)))


def root(J: MonomialIdeal, priority: Sequence[int], u: tuple) -> int:
    for k in priority:
        if all(a <= b for a, b in zip(J.generators[k].exps, u)):
            return k
    raise DomainError("no generator divides the lattice element")


def check_rooting_map(J: MonomialIdeal, priority: Sequence[int]) -> bool:
    """Both rooting-map axioms over ``L_J minus {1}``: ``h(v) | v``, and
    ``h(v) | v' | v`` forces ``h(v') = h(v)``."""
    L = [e for e in lcm_closure(g.exps for g in J.generators) if any(e)]
    h = {e: root(J, priority, e) for e in L}
    for v in L:
        hv = J.generators[h[v]].exps
        if not all(a <= b for a, b in zip(hv, v)):
            return False
        for w in L:
            if all(a <= b for a, b in zip(hv, w)) and all(a <= b for a, b in zip(w, v)):
                if h[w] != h[v]:
                    return False
    return True


def rooted_complex(J: MonomialIdeal, max_generators: int = 16) -> RootedComplex:
    """Rooted complex of ``I^eq`` for the rooting map ``h(v)`` = first
    generator of :func:`rooting_priority` dividing ``v``.

    A subset is unbroken when it contains the root of its lcm and rooted when
    every nonempty subset is unbroken.
    """
    if J.ring.z_index is None:
        raise DomainError("rooted_complex expects an equified ideal (a ring with z)")
    m = len(J)
    if m > max_generators:
        raise ResourceError(f"{m} generators exceed the rooted-complex cap of {max_generators}")
    pri = rooting_priority(J)
    gens = [g.exps for g in J.generators]

    def unbroken(S):
        e = gens[S[0]]
        for t in S[1:]:
            e = tuple(map(max, e, gens[t]))
        return root(J, pri, e) in S

    faces = []
    rooted: set = set()
    for size in range(1, m + 1):
        layer = []
        for S in itertools.combinations(range(m), size):
            if size > 1 and not all(frozenset(T) in rooted for T in itertools.combinations(S, size - 1)):
                continue
            if unbroken(S):
                layer.append(frozenset(S))
        if not layer:
            break
        rooted.update(layer)
        faces.extend(layer)
    return RootedComplex(J, pri, tuple(faces))
