"""Monomial ideals stored by their minimal generators."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContextError, DomainError
from .monomial import Monomial, RingContext, parse_monomial, render_monomial


@dataclass(frozen=True)
class ExponentBound:
    """Componentwise upper bound ``v`` on exponent vectors."""

    ring: RingContext
    bounds: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(a) for a in self.bounds)
        if len(b) != self.ring.nvars:
            raise ContextError(f"bound of length {len(b)} in a ring with {self.ring.nvars} variables")
        object.__setattr__(self, "bounds", b)

    def admits(self, u: Monomial) -> bool:
        return all(a <= v for a, v in zip(u.exps, self.bounds))

    def meet(self, other: "ExponentBound") -> "ExponentBound":
        return ExponentBound(self.ring, tuple(map(min, self.bounds, other.bounds)))


def _minimal(gens: Iterable[Monomial]) -> list[Monomial]:
    # Sorting by degree first means a divisor is always seen before its multiples.
    uniq = sorted(set(gens), key=lambda u: (u.degree, u.exps))
    kept: list[Monomial] = []
    for u in uniq:
        ue = u.exps
        if not any(all(a <= b for a, b in zip(k.exps, ue)) for k in kept):
            kept.append(u)
    kept.sort(key=lambda u: u.exps, reverse=True)
    return kept


class MonomialIdeal:
    """A monomial ideal; ``generators`` is minimal and decreasing-lex sorted."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: RingContext, generators: Iterable[Monomial] = ()):
        gens = list(generators)
        for g in gens:
            if g.ring != ring:
                raise ContextError(f"generator {g} is not in ring {ring.variables}")
        self.ring = ring
        self.generators: tuple[Monomial, ...] = tuple(_minimal(gens))

    @classmethod
    def parse(cls, text: str, ring: RingContext) -> "MonomialIdeal":
        """Parse ``term, term, ...`` optionally wrapped in parentheses."""
        return cls(ring, parse_generator_list(text, ring))

    @classmethod
    def from_exponents(cls, ring: RingContext, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ring, (Monomial(ring, tuple(v)) for v in vectors))

    @property
    def m(self) -> int:
        return len(self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __str__(self):
        return "(" + ", ".join(render_monomial(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring.variables),
            "roles": list(self.ring.roles),
            "generators": [list(g.exps) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        ring = RingContext(tuple(data["variables"]), tuple(data.get("roles") or ()))
        return cls.from_exponents(ring, data["generators"])

    def _same(self, other: "MonomialIdeal"):
        if self.ring != other.ring:
            raise ContextError(f"ideals from different rings: {self.ring.variables} vs {other.ring.variables}")

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __contains__(self, u: Monomial):
        return membership(self, u)


def minimalize(gens: Iterable[Monomial], ring: RingContext | None = None) -> MonomialIdeal:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ContextError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    return MonomialIdeal(ring, gens)


def parse_generator_list(text: str, ring: RingContext) -> list[Monomial]:
    """Parse generators in the given written order (no minimalization)."""
    body = text.strip()
    start = len(text) - len(text.lstrip())
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
        start += 1
    if not body.strip():
        return []
    out = []
    pos = start
    for piece in body.split(","):
        out.append(parse_monomial(piece, ring, offset=pos, source=text))
        pos += len(piece) + 1
    return out


def colon_by_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """``I : u`` generated by ``f / gcd(f, u)``."""
    return MonomialIdeal(I.ring, (f / f.gcd(u) for f in I.generators))


def crop(I: MonomialIdeal, v: ExponentBound) -> MonomialIdeal:
    """Keep exactly the generators that are componentwise ``<= v``."""
    return MonomialIdeal(I.ring, (f for f in I.generators if v.admits(f)))


def crop_sequence(gens: Sequence[Monomial], v: ExponentBound) -> list[Monomial]:
    """Like :func:`crop` but keeps the order of an ordered generator list."""
    return [f for f in gens if v.admits(f)]


def power_complete(ring: RingContext, d: int, v: ExponentBound | None = None,
                   variables: Sequence[int] | None = None) -> MonomialIdeal:
    """All degree ``d`` monomials in the non-``y`` variables with exponents ``<= v``."""
    if d < 0:
        raise DomainError("degree must be nonnegative")
    idx = list(ring.x_block if variables is None else variables)
    caps = [d if v is None else min(d, v.bounds[i]) for i in idx]
    found = []

    def rec(pos, left, acc):
        if pos == len(idx):
            if left == 0:
                found.append(tuple(acc))
            return
        # a cheap feasibility cut keeps the enumeration output-sensitive
        if sum(caps[pos:]) < left:
            return
        for a in range(min(caps[pos], left), -1, -1):
            acc.append(a)
            rec(pos + 1, left - a, acc)
            acc.pop()

    rec(0, d, [])
    gens = []
    for choice in found:
        e = [0] * ring.nvars
        for i, a in zip(idx, choice):
            e[i] = a
        gens.append(Monomial(ring, tuple(e)))
    return MonomialIdeal(ring, gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._same(J)
    return MonomialIdeal(I.ring, I.generators + J.generators)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._same(J)
    return MonomialIdeal(I.ring, (f * g for f in I.generators for g in J.generators))


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._same(J)
    return MonomialIdeal(I.ring, (f.lcm(g) for f in I.generators for g in J.generators))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, (f.radical for f in I.generators))


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(f.is_squarefree() for f in I.generators)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the prime ideals generated by each generator's support."""
    if I.is_zero():
        raise DomainError("the Alexander dual needs a nonzero ideal")
    if not is_squarefree(I):
        raise DomainError(f"Alexander dual requires a squarefree ideal, got {I}")
    ring = I.ring
    out = MonomialIdeal(ring, [ring.one()])
    for f in I.generators:
        prime = MonomialIdeal(ring, [ring.var(i) for i in sorted(f.support)])
        out = intersection(out, prime)
    return out


def max_exponent_vector(I: MonomialIdeal) -> ExponentBound:
    if I.is_zero():
        raise DomainError("the zero ideal has no exponent bound")
    return ExponentBound(I.ring, tuple(max(col) for col in zip(*(f.exps for f in I.generators))))


def is_equigenerated(I: MonomialIdeal) -> bool:
    return len(set(I.degrees())) <= 1


def membership(I: MonomialIdeal, u: Monomial) -> bool:
    return any(f.divides(u) for f in I.generators)


def all_monomials(ring: RingContext, max_degree: int) -> Iterable[Monomial]:
    """Every monomial of degree ``<= max_degree`` (for brute-force checks)."""
    n = ring.nvars
    for deg in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield Monomial(ring, tuple(e))
