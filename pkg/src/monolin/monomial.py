"""Monomials as dense exponent vectors over an explicit ring context."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContextError, DivisibilityError, ParseError

ROLES = ("x", "y", "z")

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(\[[^\[\]]*\])?")
_RANGE_RE = re.compile(r"^([A-Za-z_]+)(\d+)\s*\.\.\s*\1(\d+)$")


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names, each tagged ``x`` (original), ``y``
    (added by linearization) or ``z`` (added by equification)."""

    variables: tuple[str, ...]
    roles: tuple[str, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        roles = tuple(self.roles) if self.roles else ("x",) * len(variables)
        if len(roles) != len(variables):
            raise ContextError("one role tag per variable is required")
        if len(set(variables)) != len(variables):
            raise ContextError(f"duplicate variable names in {variables}")
        bad = [r for r in roles if r not in ROLES]
        if bad:
            raise ContextError(f"unknown role tags {bad}")
        if roles.count("z") > 1:
            raise ContextError("at most one z-tagged variable is allowed")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "roles", roles)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})

    @classmethod
    def parse(cls, text: str, roles: dict | None = None) -> "RingContext":
        """Parse ``x1..x5``, ``a,b,c`` or a mix such as ``x1..x3,y1,y2``
        (optionally prefixed by ``ring``).  ``roles`` maps names to role tags;
        unlisted names are tagged ``x``."""
        body = text.strip()
        start = len(text) - len(text.lstrip())
        if body.startswith("ring") and (len(body) == 4 or not body[4].isalnum()):
            start += 4
            body = body[4:]
        names: list[str] = []
        pos = start
        for piece in body.split(","):
            item = piece.strip()
            at = pos + (len(piece) - len(piece.lstrip()))
            pos += len(piece) + 1
            m = _RANGE_RE.match(item)
            if m:
                lo, hi = int(m.group(2)), int(m.group(3))
                if hi < lo:
                    raise ParseError("empty variable range", text, at)
                names.extend(f"{m.group(1)}{i}" for i in range(lo, hi + 1))
            elif _NAME_RE.fullmatch(item):
                names.append(item)
            else:
                raise ParseError(f"bad variable name {item!r}", text, at)
        roles = roles or {}
        try:
            return cls(tuple(names), tuple(roles.get(v, "x") for v in names))
        except ContextError as e:
            raise ParseError(str(e), text, start) from None

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextError(f"variable {name!r} not in ring {self.variables}") from None

    def indices(self, role: str) -> list[int]:
        return [i for i, r in enumerate(self.roles) if r == role]

    @property
    def x_block(self) -> list[int]:
        """Indices of non-``y`` variables (original variables and ``z``)."""
        return [i for i, r in enumerate(self.roles) if r != "y"]

    @property
    def z_index(self):
        zs = self.indices("z")
        return zs[0] if zs else None

    def extend(self, names: Sequence[str], role: str) -> "RingContext":
        return RingContext(self.variables + tuple(names), self.roles + (role,) * len(names))

    def drop(self, idx: Iterable[int]) -> "RingContext":
        gone = set(idx)
        keep = [i for i in range(self.nvars) if i not in gone]
        return RingContext(tuple(self.variables[i] for i in keep), tuple(self.roles[i] for i in keep))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.nvars)

    def var(self, name_or_index) -> "Monomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Monomial(self, tuple(e))

    def monomial(self, text: str) -> "Monomial":
        return parse_monomial(text, self)

    def __str__(self):
        return "ring " + ",".join(self.variables)


@dataclass(frozen=True, eq=True)
class Monomial:
    """A monomial ``prod x_i^{a_i}``; the constant 1 is the all-zero vector."""

    ring: RingContext
    exps: tuple[int, ...]
    degree: int = field(default=0, init=False, compare=False, hash=False)

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exps)
        if len(exps) != self.ring.nvars:
            raise ContextError(f"exponent vector of length {len(exps)} in a ring with {self.ring.nvars} variables")
        if any(a < 0 for a in exps):
            raise DivisibilityError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "degree", sum(exps))

    def _check(self, other: "Monomial"):
        if self.ring != other.ring:
            raise ContextError(f"monomials from different rings: {self.ring.variables} vs {other.ring.variables}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.ring, tuple(a * k for a in self.exps))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ring, tuple(map(min, self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        if not other.divides(self):
            raise DivisibilityError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exps, other.exps)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exps) if a)

    @property
    def radical(self) -> "Monomial":
        return Monomial(self.ring, tuple(1 if a else 0 for a in self.exps))

    @property
    def max_exponent(self) -> int:
        return max(self.exps, default=0)

    def is_squarefree(self) -> bool:
        return self.max_exponent <= 1

    def is_one(self) -> bool:
        return self.degree == 0

    def __str__(self):
        return render_monomial(self)

    def __repr__(self):
        return f"Monomial({render_monomial(self)!r})"


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1, 0 or -1 as ``u`` is lex-greater, equal or smaller than ``v``.

    ``u > v`` iff the leftmost nonzero entry of ``u.exps - v.exps`` is positive.
    """
    u._check(v)
    return (u.exps > v.exps) - (u.exps < v.exps)


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return u.lcm(v)


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return u.gcd(v)


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """``v / u``; raises :class:`DivisibilityError` unless ``u | v``."""
    return v / u


def support(u: Monomial) -> frozenset[int]:
    return u.support


def radical_monomial(u: Monomial) -> Monomial:
    return u.radical


def max_exponent(u: Monomial) -> int:
    return u.max_exponent


def lex_key(u: Monomial):
    return u.exps


def render_monomial(u: Monomial) -> str:
    parts = []
    for name, a in zip(u.ring.variables, u.exps):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, ring: RingContext, offset: int = 0, source: str | None = None) -> Monomial:
    """Parse ``x1^2*x2*y3``; juxtaposition with whitespace is not accepted."""
    source = text if source is None else source
    body = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if body == "1":
        return ring.one()
    if not body:
        raise ParseError("empty monomial", source, lead)
    exps = [0] * ring.nvars
    pos = 0
    while True:
        m = _NAME_RE.match(body, pos)
        if not m:
            raise ParseError("expected a variable name", source, lead + pos)
        name = m.group(0)
        if name not in ring._index:
            raise ParseError(f"unknown variable {name!r}", source, lead + pos)
        pos = m.end()
        power = 1
        if pos < len(body) and body[pos] == "^":
            e = re.compile(r"\d+").match(body, pos + 1)
            if not e:
                raise ParseError("expected an exponent after '^'", source, lead + pos + 1)
            power = int(e.group(0))
            pos = e.end()
        exps[ring._index[name]] += power
        if pos == len(body):
            break
        if body[pos] != "*":
            raise ParseError("expected '*' between factors", source, lead + pos)
        pos += 1
    return Monomial(ring, tuple(exps))


def rebase(u: Monomial, ring: RingContext) -> Monomial:
    """Express ``u`` in another ring by matching variable names."""
    exps = [0] * ring.nvars
    for name, a in zip(u.ring.variables, u.exps):
        if a:
            exps[ring.index(name)] = a
    return Monomial(ring, tuple(exps))
