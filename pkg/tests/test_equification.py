import itertools
import random

import pytest

from helpers import ideal, random_ideal, random_mixed_ideal, ring
from monolin.equification import (check_rooting_map, deequify, equify, lattice_embedding_check, lift, lin_general,
                                  lin_general_at_z1, lin_general_z1, rooted_complex, rooting_priority,
                                  syzygy_redundant, syzygy_redundant_eq)
from monolin.errors import ArgumentError, ContextError, DomainError
from monolin.ideal import MonomialIdeal, is_equigenerated, parse_generator_list
from monolin.monomial import RingContext
from monolin.oracle import oracle_table
from monolin.quotients import has_linear_quotients


def test_equify_examples():
    R = RingContext.parse("x, y")
    J = equify(MonomialIdeal.parse("x^3, y^2", R))
    assert J.ring.variables == ("x", "y", "z") and J.ring.z_index == 2
    assert J == MonomialIdeal.parse("x^3, y^2*z", J.ring)
    R = RingContext.parse("x, z")
    assert equify(MonomialIdeal.parse("x^2, z", R)).ring.variables == ("x", "z", "z0")


def test_equify_places_z_before_y_variables():
    R = RingContext.parse("x1, x2, y1", {"y1": "y"})
    J = equify(MonomialIdeal.parse("x1^2, x2", R))
    assert J.ring.variables == ("x1", "x2", "z", "y1")


def test_equify_errors_and_trivial_cases():
    I = ideal("x1*x2, x2*x3", 3)
    assert deequify(equify(I)) == I
    assert all(g.exps[3] == 0 for g in equify(I).generators)
    with pytest.raises(DomainError):
        equify(MonomialIdeal(ring(2)))
    with pytest.raises(ContextError):
        equify(equify(I))
    with pytest.raises(ContextError):
        equify(I, "x1")


def test_equify_round_trip_and_degrees():
    rng = random.Random(6)
    for _ in range(100):
        I = random_ideal(rng)
        J = equify(I)
        assert is_equigenerated(J) and len(J) == len(I)
        assert deequify(J) == I


def test_z_lift_commutes_with_lcm():
    rng = random.Random(2)
    R = ring(3)
    T, pos = equify(ideal("x1", 3)).ring, 3
    for _ in range(50):
        u, v = (R.monomial("1") * R.var(rng.randrange(3)) ** rng.randint(0, 3) for _ in range(2))
        a, b = rng.randint(0, 4), rng.randint(0, 4)
        assert lift(u, T, pos, a).lcm(lift(v, T, pos, b)) == lift(u.lcm(v), T, pos, max(a, b))


def test_syzygy_example():
    R = ring(4)
    gens = parse_generator_list("x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3", R)
    plain = syzygy_redundant(gens, 1, 2)
    assert plain.redundant and plain.witness == 0
    assert plain.lcm_ij == R.monomial("x1^2*x2^2*x3^3*x4^3")
    assert not syzygy_redundant_eq(gens, 1, 2).redundant
    assert not syzygy_redundant(gens, 0, 1).redundant
    with pytest.raises(ArgumentError):
        syzygy_redundant(gens, 1, 1)
    with pytest.raises(ArgumentError):
        syzygy_redundant(gens, 0, 3)


def test_eq_redundancy_matches_the_lifted_generators():
    rng = random.Random(15)
    for _ in range(80):
        I = random_mixed_ideal(rng)
        gens = list(I.generators)
        J = equify(I)
        pos = J.ring.z_index
        d = max(I.degrees())
        lifted = [lift(f, J.ring, pos, d - f.degree) for f in gens]
        for i, j in itertools.permutations(range(len(gens)), 2):
            eq = syzygy_redundant_eq(gens, i, j)
            assert eq.redundant == syzygy_redundant(lifted, i, j).redundant
            if eq.redundant:
                assert syzygy_redundant(gens, i, j).redundant


def test_lin_general_examples():
    I = ideal("x1^3, x1*x2", 2)
    L = lin_general(I)
    assert L.ring.variables == ("x1", "x2", "z", "y1", "y2")
    assert has_linear_quotients(L.ideal, L.sequence)
    expected = "x1^2, x1*x2, x1*y2, x2*y2"
    assert lin_general_z1(I) == lin_general_at_z1(I)
    assert lin_general_z1(I) == MonomialIdeal.parse(expected, lin_general_z1(I).ring)


def test_lin_general_z1_closed_form():
    rng = random.Random(23)
    for _ in range(60):
        I = random_mixed_ideal(rng, (1, 4), (2, 4), (1, 4), 3)
        assert lin_general_z1(I) == lin_general_at_z1(I), I
        L = lin_general(I)
        assert has_linear_quotients(L.ideal, L.sequence), I


def test_lattice_embedding():
    rng = random.Random(3)
    for _ in range(60):
        rep = lattice_embedding_check(random_mixed_ideal(rng))
        assert rep and rep.size_eq >= rep.size_I
    rep = lattice_embedding_check(ideal("x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3", 4))
    assert (rep.size_I, rep.size_eq, rep.subsets_checked) == (7, 8, 8)


def test_rooted_complex_example():
    J = equify(ideal("x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3", 4))
    rc = rooted_complex(J)
    assert rc.f_vector() == [3, 3, 1]
    assert check_rooting_map(J, rc.priority)
    with pytest.raises(DomainError):
        rooted_complex(ideal("x1", 2))


def test_rooted_complex_properties():
    rng = random.Random(19)
    for _ in range(40):
        J = equify(random_mixed_ideal(rng))
        rc = rooted_complex(J)
        assert check_rooting_map(J, rooting_priority(J))
        faces = set(rc.faces)
        for F in faces:
            for k in range(1, len(F)):
                assert all(frozenset(S) in faces for S in itertools.combinations(F, k))
        # faces of size k + 1 span the k-th module of a (possibly non-minimal) resolution
        totals = oracle_table(J).totals()
        fv = rc.f_vector()
        assert len(fv) >= len(totals)
        assert all(f >= b for f, b in zip(fv, totals))
