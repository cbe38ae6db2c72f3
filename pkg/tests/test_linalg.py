"""Exact linear algebra tests: products, inverses, determinants, and
the squared-norm calculus."""

import random
from fractions import Fraction

import pytest

from rotnear.field import eps, is_infinitesimal, sign
from rotnear.linalg import (
    Mat,
    SingularMatrixError,
    Vec,
    det,
    frob_sq,
    inverse,
    is_orthogonal,
    mat_from_json,
    mat_to_json,
)
from rotnear.sampling import random_skew


def rand_mat(rng, n, bound=3):
    return Mat([[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)])


def test_identity_product():
    a = Mat([[1, 2], [3, 4]])
    assert Mat.identity(2) @ a == a
    assert a @ Mat.identity(2) == a


def test_double_transpose():
    a = Mat([[1, 2], [3, 4]])
    assert a.T.T == a


def test_square_of_eps_rotation_generator():
    a = Mat([[0, eps], [-eps, 0]])
    assert a @ a == Mat([[-(eps**2), 0], [0, -(eps**2)]])


def test_inverse_unipotent():
    assert inverse(Mat([[1, eps], [0, 1]])) == Mat([[1, -eps], [0, 1]])


def test_inverse_2x2_matches_adjugate():
    m = Mat([[1, eps], [-eps, 1]])
    # adjugate oracle: inverse = adj / det for 2x2
    d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    adj = Mat([[m[1, 1] / d, -m[0, 1] / d], [-m[1, 0] / d, m[0, 0] / d]])
    assert inverse(m) == adj
    assert adj == Mat(
        [
            [1 / (1 + eps**2), -eps / (1 + eps**2)],
            [eps / (1 + eps**2), 1 / (1 + eps**2)],
        ]
    )
    assert m @ inverse(m) == Mat.identity(2)


def test_inverse_identity():
    assert inverse(Mat.identity(3)) == Mat.identity(3)


def test_singular_matrix_reports_column():
    with pytest.raises(SingularMatrixError) as err:
        inverse(Mat([[0, 0], [0, 1]]))
    assert err.value.column == 0
    with pytest.raises(SingularMatrixError) as err:
        inverse(Mat([[1, 1], [1, 1]]))
    assert err.value.column == 1


def test_det_examples():
    assert det(Mat.identity(3)) == 1
    assert det(Mat([[0, 1], [-1, 0]])) == 1
    assert det(Mat.diag([-1, 1, 1])) == -1
    assert det(Mat([[1, 1], [1, 1]])) == 0


def test_frob_sq_examples():
    assert frob_sq(Mat.identity(3)) == 3
    assert frob_sq(Mat.zero(4)) == 0


def test_frob_sq_contact_value():
    from rotnear.cayley import cayley

    c = cayley(eps * Mat([[0, 1], [-1, 0]]))
    assert frob_sq(Mat.identity(2) - c) == 8 * eps**2 / (1 + eps**2)


def test_is_orthogonal_examples():
    assert is_orthogonal(Mat.identity(4))
    assert not is_orthogonal(Mat.diag([1, 2]))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        Mat.identity(2) @ Mat.identity(3)
    with pytest.raises(ValueError):
        Mat.identity(2) + Mat.identity(3)
    with pytest.raises(ValueError):
        Mat.identity(3) @ Vec([1, 2])
    with pytest.raises(ValueError):
        Vec([1, 2]) + Vec([1, 2, 3])


def test_entries_are_canonicalized_exact():
    m = Mat([[1, 0], [0, 1]])
    assert all(isinstance(x, Fraction) for x in m.entries())
    with pytest.raises(TypeError):
        Mat([[0.5, 0], [0, 1]])


def test_non_square_rejected():
    with pytest.raises(ValueError):
        Mat([[1, 2, 3], [4, 5, 6]])


def test_inverse_round_trip_and_det_on_samples():
    rng = random.Random(11)
    done = 0
    while done < 25:
        n = rng.randint(2, 4)
        a = rand_mat(rng, n)
        d = det(a)
        if d == 0:
            continue
        ai = inverse(a)
        assert ai @ a == Mat.identity(n)
        assert a @ ai == Mat.identity(n)
        assert det(ai) == 1 / d
        done += 1


def test_det_is_multiplicative_on_samples():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randint(2, 4)
        a, b = rand_mat(rng, n), rand_mat(rng, n)
        assert det(a @ b) == det(a) * det(b)


def _mixed_sample(rng, n):
    # rational plus infinitesimal perturbation, to exercise Q(e) entries
    a = rand_mat(rng, n, 2)
    if rng.random() < 0.5:
        a = a + eps * random_skew(rng, n, 2)
    return a


def test_squared_submultiplicativity_on_samples():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 3)
        a, b = _mixed_sample(rng, n), _mixed_sample(rng, n)
        assert sign(frob_sq(a) * frob_sq(b) - frob_sq(a @ b)) >= 0


def test_weak_triangle_bound_on_samples():
    rng = random.Random(14)
    for _ in range(20):
        n = rng.randint(2, 3)
        a, b = _mixed_sample(rng, n), _mixed_sample(rng, n)
        bound = 2 * frob_sq(a) + 2 * frob_sq(b)
        assert sign(bound - frob_sq(a + b)) >= 0


def test_frob_sq_zero_iff_zero_matrix():
    rng = random.Random(15)
    for _ in range(20):
        n = rng.randint(2, 3)
        a = _mixed_sample(rng, n)
        assert (frob_sq(a) == 0) == (a == Mat.zero(n))
    assert frob_sq(Mat.zero(3)) == 0


def test_frob_sq_of_infinitesimal_entries_is_infinitesimal():
    rng = random.Random(16)
    for _ in range(10):
        n = rng.randint(2, 4)
        a = eps * rand_mat(rng, n)
        assert is_infinitesimal(frob_sq(a))


def test_matrix_json_round_trip():
    m = Mat([[1, eps], [-eps, Fraction(1, 2)]])
    obj = mat_to_json(m)
    assert obj["n"] == 2
    assert obj["entries"][0] == ["1", "e"]
    assert mat_from_json(obj) == m


def test_matrix_json_rejects_bad_shapes():
    with pytest.raises(ValueError):
        mat_from_json({"n": 2, "entries": [["1", "0"]]})
    with pytest.raises(ValueError):
        mat_from_json({"n": 2, "entries": [["1", "0"], ["0", 1]]})
    with pytest.raises(ValueError):
        mat_from_json([["1"]])


def test_mat_pow():
    b = Mat([[0, 1], [-1, 0]])
    assert b**0 == Mat.identity(2)
    assert b**2 == -Mat.identity(2)
    assert b**3 == -b
