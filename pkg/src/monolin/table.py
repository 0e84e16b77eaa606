"""Graded Betti tables."""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Mapping

from .errors import DomainError


class BettiTable:
    """Map ``(i, j) -> beta_{i,j}``, ``i`` homological, ``j`` internal degree.

    Zero entries are never stored, so two tables compare equal exactly when
    all their graded Betti numbers agree.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), v in (entries or {}).items():
            if i < 0 or j < 0 or v < 0:
                raise DomainError(f"invalid Betti entry beta_{i},{j} = {v}")
            if v:
                clean[(int(i), int(j))] = int(v)
        self.entries: dict[tuple[int, int], int] = clean

    @classmethod
    def linear(cls, totals: Iterable[int], d: int) -> "BettiTable":
        """Table of a ``d``-linear resolution with the given totals."""
        return cls({(i, i + d): b for i, b in enumerate(totals)})

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = defaultdict(int, self.entries)
        for k, v in other.entries.items():
            out[k] += v
        return BettiTable(out)

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        return [self.total(i) for i in range(self.projective_dimension + 1)]

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=-1)

    @property
    def is_linear(self) -> bool:
        return len({j - i for i, j in self.entries}) <= 1

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (i, j), v in sorted(self.entries.items()):
            out[j - i][i] = v
        return dict(sorted(out.items()))

    def render(self) -> str:
        """ASCII table: column ``i``, row ``j - i``, dashes for zeros."""
        if not self.entries:
            return "(zero table)"
        cols = range(self.projective_dimension + 1)
        rows = self.rows()
        labels = ["", "total:"] + [f"{r}:" for r in rows]
        cells = [[str(c) for c in cols], [str(t) for t in self.totals()]]
        for r, row in rows.items():
            cells.append([str(row[c]) if c in row else "-" for c in cols])
        lw = max(len(s) for s in labels)
        cw = max(len(s) for line in cells for s in line)
        lines = []
        for lab, line in zip(labels, cells):
            lines.append(lab.rjust(lw) + " " + " ".join(s.rjust(cw) for s in line))
        return "\n".join(s.rstrip() for s in lines)

    def to_json(self) -> dict:
        return {
            "rows": {str(r): {str(i): v for i, v in row.items()} for r, row in self.rows().items()},
            "totals": self.totals(),
        }

    @classmethod
    def from_json(cls, data) -> "BettiTable":
        if isinstance(data, str):
            data = json.loads(data)
        entries = {}
        for r, row in data["rows"].items():
            for i, v in row.items():
                entries[(int(i), int(i) + int(r))] = v
        return cls(entries)
