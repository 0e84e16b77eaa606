"""Random instance generators shared by the test modules."""

import contextlib
import itertools
import time

from monolin.ideal import MonomialIdeal
from monolin.monomial import Monomial, RingContext
from monolin.table import BettiTable


CRITERIA_LINES = []


@contextlib.contextmanager
def criterion(number, title, seconds=None):
    """Time a block, print one PASS/FAIL line and enforce the time limit."""
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if seconds is not None:
            assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"
    except BaseException as exc:
        line = f"FAIL criterion {number}: {title} ({type(exc).__name__}: {exc})"
        CRITERIA_LINES.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {title} ({time.perf_counter() - start:.2f}s)"
    CRITERIA_LINES.append(line)
    print(line)


def table_from_rows(rows):
    """BettiTable from Macaulay-style rows ``{row: {i: value}}``."""
    return BettiTable({(i, r + i): v for r, cols in rows.items() for i, v in cols.items()})


def ring(n, stem="x"):
    return RingContext(tuple(f"{stem}{i}" for i in range(1, n + 1)))


def ideal(text, n=None, names=None):
    R = RingContext.parse(names) if names else ring(n)
    return MonomialIdeal.parse(text, R)


def random_monomial(rng, R, degree, max_exp=None, squarefree=False):
    n = R.nvars
    cap = 1 if squarefree else (max_exp or degree)
    while True:
        e = [0] * n
        for _ in range(degree):
            i = rng.randrange(n)
            e[i] += 1
        if max(e, default=0) <= cap:
            return Monomial(R, tuple(e))


def random_equigenerated(rng, n_range=(1, 6), d_range=(1, 4), m_max=6, max_exp=3, squarefree=False):
    while True:
        n = rng.randint(*n_range)
        d = rng.randint(*d_range)
        if squarefree and d > n:
            continue
        if not squarefree and max_exp * n < d:
            continue
        R = ring(n)
        m = rng.randint(1, m_max)
        gens = {random_monomial(rng, R, d, max_exp, squarefree) for _ in range(m)}
        return MonomialIdeal(R, gens)


def random_ideal(rng, n_range=(1, 5), m_max=6, deg_max=5):
    n = rng.randint(*n_range)
    R = ring(n)
    gens = set()
    for _ in range(rng.randint(1, m_max)):
        gens.add(random_monomial(rng, R, rng.randint(1, deg_max)))
    return MonomialIdeal(R, gens)


def random_mixed_ideal(rng, n_range=(2, 5), m_range=(2, 6), deg_range=(2, 5), max_exp=3):
    """A non-equigenerated ideal with a prescribed number of minimal generators."""
    while True:
        n = rng.randint(*n_range)
        R = ring(n)
        target = rng.randint(*m_range)
        gens = set()
        for _ in range(20 * target):
            d = rng.randint(*deg_range)
            if d > n * max_exp:
                continue
            gens.add(random_monomial(rng, R, d, max_exp))
            I = MonomialIdeal(R, gens)
            gens = set(I.generators)
            if len(gens) == target:
                break
        if len(gens) == target and len(set(I.degrees())) > 1:
            return I


def random_graph(rng, n_range=(3, 7)):
    n = rng.randint(*n_range)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return n, rng.sample(pairs, rng.randint(1, len(pairs)))


def all_equigenerated(n, d, m_max):
    """Every equigenerated ideal in n variables, degree d, with at most m_max
    minimal generators (all same-degree sets are antichains)."""
    R = ring(n)
    monos = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        monos.append(Monomial(R, tuple(e)))
    for m in range(1, m_max + 1):
        for gens in itertools.combinations(monos, m):
            yield MonomialIdeal(R, gens)
