"""Cayley map tests: the involution, skew <-> rotation exchange, the
near-identity construction, and the truncated-series identity."""

import random

import pytest

from rotnear.cayley import (
    CayleyObstructionError,
    cayley,
    infinitesimal_rotation,
    is_skew,
    neumann_check,
)
from rotnear.field import eps, eps_order, is_infinitesimal
from rotnear.linalg import Mat, det, frob_sq, inverse, is_orthogonal
from rotnear.quadspace import BilinearSpace
from rotnear.sampling import random_rotation, random_skew

B2 = Mat([[0, 1], [-1, 0]])


def test_cayley_of_zero_is_identity():
    assert cayley(Mat.zero(3)) == Mat.identity(3)


def test_cayley_2x2_symbolic():
    got = cayley(Mat([[0, eps], [-eps, 0]]))
    d = 1 + eps**2
    assert got == Mat([[(1 - eps**2) / d, -2 * eps / d], [2 * eps / d, (1 - eps**2) / d]])
    # multiply back: (I+A) * got == I-A
    a = Mat([[0, eps], [-eps, 0]])
    assert (Mat.identity(2) + a) @ got == Mat.identity(2) - a


def test_cayley_is_an_involution():
    assert cayley(cayley(B2)) == B2


def test_cayley_obstruction():
    with pytest.raises(CayleyObstructionError):
        cayley(-Mat.identity(2))
    with pytest.raises(CayleyObstructionError):
        cayley(Mat.diag([-1, 1, 1]))


def test_skew_maps_to_special_orthogonal_on_samples():
    rng = random.Random(21)
    for _ in range(20):
        n = rng.randint(2, 5)
        a = random_skew(rng, n)
        q = cayley(a)
        assert is_orthogonal(q)
        assert det(q) == 1
        assert cayley(q) == a


def test_rotation_maps_to_skew_on_samples():
    rng = random.Random(22)
    done = 0
    while done < 15:
        n = rng.randint(3, 5)
        sp = BilinearSpace.identity_form(n)
        r = random_rotation(sp, rng)
        if det(Mat.identity(n) + r.m) == 0:
            continue
        s = cayley(r.m)
        assert is_skew(s)
        assert cayley(s) == r.m
        done += 1


def test_infinitesimal_rotation_2x2():
    a = infinitesimal_rotation(B2)
    assert frob_sq(Mat.identity(2) - a) == 8 * eps**2 / (1 + eps**2)


def test_infinitesimal_rotation_rejects_bad_input():
    with pytest.raises(ValueError):
        infinitesimal_rotation(Mat.zero(2))
    with pytest.raises(ValueError):
        infinitesimal_rotation(Mat([[0, 1], [1, 0]]))  # symmetric, not skew
    with pytest.raises(ValueError):
        infinitesimal_rotation(eps * B2)  # entries not rational


def test_infinitesimal_rotation_3x3_block():
    b = Mat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    a = infinitesimal_rotation(b)
    i = Mat.identity(3)
    assert a != i and a != -i
    assert is_orthogonal(a) and det(a) == 1
    assert is_infinitesimal(frob_sq(i - a))


def test_contact_order_is_exactly_two_on_samples():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(2, 5)
        b = random_skew(rng, n)
        a = infinitesimal_rotation(b)
        assert eps_order(frob_sq(Mat.identity(n) - a)) == 2


def test_neumann_m1_is_trivial():
    rep = neumann_check(B2, 1)
    assert rep.d == Mat.identity(2)
    assert rep.identity_holds


def test_neumann_m3_exact_expansion():
    rep = neumann_check(B2, 3)
    i = Mat.identity(2)
    eb = eps * B2
    assert rep.d == i - eb + eb @ eb
    assert rep.identity_holds
    # the defining identity, recomputed directly
    assert (i + eb) @ rep.d == i + (eps**3) * (B2**3)
    assert rep.gap_infinitesimal
    assert is_infinitesimal(frob_sq(inverse(i + eb) - rep.d))


def test_neumann_rejects_even_m():
    with pytest.raises(ValueError):
        neumann_check(B2, 2)
    with pytest.raises(ValueError):
        neumann_check(B2, 0)


def test_neumann_gap_order_grows_with_m():
    for m in (3, 5, 7):
        rep = neumann_check(B2, m)
        assert rep.identity_holds
        assert eps_order(rep.gap_sq) >= 2 * m
