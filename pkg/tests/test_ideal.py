import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import ideal, random_ideal, ring
from monolin.errors import ContextError, DomainError
from monolin.ideal import (ExponentBound, MonomialIdeal, all_monomials, alexander_dual,
                           colon_by_monomial, crop, ideal_sum, intersection, is_equigenerated,
                           is_squarefree, max_exponent_vector, membership, minimalize, power_complete,
                           product, radical)
from monolin.monomial import Monomial, RingContext

R3 = RingContext.parse("x,y,z")


def test_minimalize_examples():
    R = ring(4)
    I = minimalize([R.monomial(s) for s in ("x1^2*x2", "x1*x2*x3*x4", "x1*x2")])
    assert str(I) == "(x1*x2)"
    R5 = RingContext.parse("x1..x4, z", {"z": "z"})
    I = minimalize([R5.monomial("x1^2*x2*z"), R5.monomial("x1*x2*x3*x4")])
    assert len(I) == 2
    assert MonomialIdeal(R).is_zero()


def test_colon_examples():
    I = ideal("x1*x2*x3", 5)
    R = I.ring
    assert colon_by_monomial(I, R.monomial("x3*x4*x5")) == ideal("x1*x2", 5)
    assert colon_by_monomial(I, R.monomial("x2*x3*x4")) == ideal("x1", 5)
    assert colon_by_monomial(I, R.one()) == I


def test_colon_against_definition():
    rng = random.Random(3)
    for _ in range(30):
        I = random_ideal(rng, (1, 3), 4, 3)
        R = I.ring
        u = Monomial(R, tuple(rng.randint(0, 2) for _ in range(R.nvars)))
        C = colon_by_monomial(I, u)
        for w in all_monomials(R, 4):
            assert membership(C, w) == membership(I, w * u)


def test_crop_examples():
    I = MonomialIdeal.parse("x*y^2, x*y*z, x*z^2", R3)
    assert crop(I, ExponentBound(R3, (1, 2, 1))) == MonomialIdeal.parse("x*y^2, x*y*z", R3)
    assert crop(I, max_exponent_vector(I)) == I
    cube = power_complete(ring(3), 3)
    cropped = crop(cube, ExponentBound(cube.ring, (2, 2, 2)))
    assert len(cropped) == 7 and all(g.max_exponent <= 2 for g in cropped)


def test_crop_composition():
    rng = random.Random(11)
    for _ in range(50):
        I = random_ideal(rng)
        n = I.ring.nvars
        v = ExponentBound(I.ring, tuple(rng.randint(0, 4) for _ in range(n)))
        w = ExponentBound(I.ring, tuple(rng.randint(0, 4) for _ in range(n)))
        assert crop(crop(I, v), w) == crop(I, v.meet(w))


def test_power_complete_examples():
    R = ring(5)
    assert len(power_complete(R, 3, ExponentBound(R, (1,) * 5))) == 10
    R3n = ring(3)
    P = power_complete(R3n, 3, ExponentBound(R3n, (2, 1, 1)))
    assert [str(g) for g in P] == ["x1^2*x2", "x1^2*x3", "x1*x2*x3"]
    R1 = ring(1)
    assert str(power_complete(R1, 2, ExponentBound(R1, (2,)))) == "(x1^2)"


def test_sum_product_intersection_examples():
    R = ring(4)
    I = MonomialIdeal.parse("x1^2*x2, x2*x3*x4", R)
    J = MonomialIdeal.parse("x1*x2", R)
    assert intersection(I, J) == MonomialIdeal.parse("x1^2*x2, x1*x2*x3*x4", R)
    assert ideal_sum(I, MonomialIdeal(R)) == I
    assert product(MonomialIdeal.parse("x1", R), MonomialIdeal.parse("x2", R)) == J
    with pytest.raises(ContextError):
        ideal_sum(I, ideal("x1", 3))


def test_operations_against_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        I = random_ideal(rng, (2, 3), 3, 3)
        R = I.ring
        J = MonomialIdeal(R, [Monomial(R, tuple(rng.randint(0, 2) for _ in range(R.nvars))) for _ in range(2)])
        S, P, X = ideal_sum(I, J), product(I, J), intersection(I, J)
        for w in all_monomials(R, 6):
            inI, inJ = membership(I, w), membership(J, w)
            assert membership(S, w) == (inI or inJ)
            assert membership(X, w) == (inI and inJ)
            in_prod = any(membership(I, a) and membership(J, w / a)
                          for a in all_monomials(R, w.degree) if a.divides(w))
            assert membership(P, w) == in_prod


def test_radical_examples():
    R = ring(3)
    assert radical(MonomialIdeal.parse("x1^2, x2*x3", R)) == MonomialIdeal.parse("x1, x2*x3", R)
    I = MonomialIdeal.parse("x1*x2, x2*x3", R)
    assert radical(I) == I and is_squarefree(I)


def test_alexander_dual_examples():
    R = ring(3)
    # (x1,x2) cap (x2,x3) by pairwise lcms: x1x2, x1x3, x2, x2x3 -> (x2, x1x3)
    assert alexander_dual(MonomialIdeal.parse("x1*x2, x2*x3", R)) == MonomialIdeal.parse("x2, x1*x3", R)
    assert alexander_dual(MonomialIdeal.parse("x1", R)) == MonomialIdeal.parse("x1", R)
    with pytest.raises(DomainError):
        alexander_dual(MonomialIdeal.parse("x1^2", R))


def test_alexander_dual_involution():
    rng = random.Random(20)
    checked = 0
    while checked < 20:
        n = rng.randint(2, 5)
        R = ring(n)
        gens = [Monomial(R, tuple(rng.randint(0, 1) for _ in range(n))) for _ in range(rng.randint(1, 4))]
        I = MonomialIdeal(R, gens)
        if I.is_unit():
            continue
        assert alexander_dual(alexander_dual(I)) == I
        checked += 1


def test_alexander_dual_brute_force():
    # a squarefree monomial lies in the dual iff it meets every generator support
    rng = random.Random(21)
    for _ in range(20):
        n = rng.randint(2, 4)
        R = ring(n)
        I = MonomialIdeal(R, [Monomial(R, tuple(rng.randint(0, 1) for _ in range(n))) for _ in range(3)])
        if I.is_unit():
            continue
        D = alexander_dual(I)
        for w in all_monomials(R, n):
            if w.is_squarefree():
                assert membership(D, w) == all(w.support & f.support for f in I)


def test_misc_queries():
    I = ideal("x1^3*x2, x2*x3^3", 3)
    assert max_exponent_vector(I).bounds == (3, 1, 3)
    assert not is_equigenerated(MonomialIdeal.parse("x^3, x*y, y^4", R3))
    assert membership(ideal("x1*x2", 2), ideal("x1^2*x2^3", 2).generators[0])
    with pytest.raises(DomainError):
        max_exponent_vector(MonomialIdeal(R3))


def test_json_round_trip():
    I = ideal("x1^3*x2, x2*x3^3", 3)
    assert MonomialIdeal.from_json(I.to_json()) == I


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6))
def test_minimalize_idempotent_and_membership(vectors):
    R = ring(3)
    gens = [Monomial(R, v) for v in vectors]
    I = minimalize(gens)
    assert minimalize(I.generators) == I
    assert [g.exps for g in I.generators] == sorted((g.exps for g in I.generators), reverse=True)
    for w in all_monomials(R, 5):
        assert membership(I, w) == any(g.divides(w) for g in gens)
