"""Pure-Python homology kernel (reference implementation and fallback)."""

from __future__ import annotations

from math import gcd


def faces_by_size(facets: list[int]) -> list[list[int]]:
    """All faces of the complex generated by ``facets`` (bitmasks), bucketed
    by cardinality; bucket 0 holds the empty face."""
    seen = set()
    for F in facets:
        sub = F
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & F
    top = max((f.bit_count() for f in seen), default=0)
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for f in seen:
        buckets[f.bit_count()].append(f)
    for b in buckets:
        b.sort()
    return buckets


def _boundary_rows(faces: list[int], index: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for f in faces:
        row = {}
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[index[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rows


def rank_exact(rows: list[dict[int, int]]) -> int:
    """Rank over the rationals by fraction-free incremental echelon form.

    Each incoming row is reduced against existing pivot rows keyed by their
    leading column; ``r <- p*r - a*s`` keeps everything integral and each
    result is divided by the gcd of its entries.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            s = pivots.get(c)
            if s is None:
                pivots[c] = r
                break
            a, p = r[c], s[c]
            if p in (1, -1):
                f = a * p
                for k, v in s.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                out = {k: p * v for k, v in r.items()}
                for k, v in s.items():
                    nv = out.get(k, 0) - a * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
                r = out
            if r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
    return len(pivots)


def rank_mod_p(rows: list[dict[int, int]], prime: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {k: v % prime for k, v in row.items() if v % prime}
        while r:
            c = min(r)
            s = pivots.get(c)
            if s is None:
                inv = pow(r[c], -1, prime)
                pivots[c] = {k: v * inv % prime for k, v in r.items()}
                break
            a = r[c]
            for k, v in s.items():
                nv = (r.get(k, 0) - a * v) % prime
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def reduced_homology(facets: list[int], prime: int | None = None) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ...]`` of the complex generated by ``facets``."""
    buckets = faces_by_size(facets)
    ranks = [0] * (len(buckets) + 1)
    for s in range(1, len(buckets)):
        index = {f: i for i, f in enumerate(buckets[s - 1])}
        rows = _boundary_rows(buckets[s], index)
        ranks[s] = rank_exact(rows) if prime is None else rank_mod_p(rows, prime)
    return [len(buckets[s]) - ranks[s] - ranks[s + 1] for s in range(len(buckets))]


def multidegree_betti(b, gens, prime: int | None = None) -> list[int]:
    """``beta_{i,b}`` for ``i = 0, 1, ...`` from the upper Koszul complex.

    ``gens`` are exponent tuples of the generators dividing ``b``; the
    complex is generated by the facets ``{v : g_v < b_v}``.
    """
    facets = set()
    for g in gens:
        mask = 0
        for v, (gv, bv) in enumerate(zip(g, b)):
            if gv < bv:
                mask |= 1 << v
        facets.add(mask)
    facets = maximal_facets(facets)
    if len(facets) == 1 and next(iter(facets)) == 0:
        return [1]
    common = -1
    for F in facets:
        common &= F
    if common:
        return []
    return reduced_homology(sorted(facets), prime)


def maximal_facets(facets) -> list[int]:
    fs = sorted(set(facets), key=lambda f: -f.bit_count())
    out: list[int] = []
    for f in fs:
        if not any(f & g == f for g in out):
            out.append(f)
    return out
