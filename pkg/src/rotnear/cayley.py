"""The Cayley map A |-> (I-A)(I+A)^{-1} and rotations infinitesimally
near the identity.

The map is an involution exchanging skew-symmetric matrices with
rotations that do not have eigenvalue -1.  Feeding it e*B for a nonzero
rational skew-symmetric B produces, over Q(e), a rotation A != +-I with
frob_sq(I - A) infinitesimal of e-order exactly 2: every guarantee is
verified exactly before `infinitesimal_rotation` returns.

`neumann_check` verifies the truncated-geometric-series identity

    (I + eB) (I - eB + e^2 B^2 - ... + e^{m-1} B^{m-1}) = I + e^m B^m

for odd m, and reports whether the truncation D differs from the true
inverse of I + eB by a matrix of infinitesimal squared norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import eps, is_infinitesimal
from .linalg import Mat, SingularMatrixError, det, frob_sq, inverse, is_orthogonal

__all__ = [
    "CayleyObstructionError",
    "cayley",
    "is_skew",
    "infinitesimal_rotation",
    "NeumannReport",
    "neumann_check",
]


class CayleyObstructionError(ArithmeticError):
    """I + A is singular: -1 is an eigenvalue obstruction."""


def cayley(a):
    """Apply the Cayley map exactly; raises CayleyObstructionError when
    I + A is singular."""
    i = Mat.identity(a.n)
    try:
        inv = inverse(i + a)
    except SingularMatrixError as exc:
        raise CayleyObstructionError(
            "-1 is an eigenvalue obstruction: I+A is singular"
        ) from exc
    return (i - a) @ inv


def is_skew(a):
    return a.T == -a


def _require_rational_skew(b, *, nonzero):
    if not all(isinstance(x, Fraction) for x in b.entries()):
        raise ValueError("rational entries required")
    if not is_skew(b):
        raise ValueError("skew-symmetric matrix required")
    if nonzero and all(x == 0 for x in b.entries()):
        raise ValueError("nonzero matrix required")


def infinitesimal_rotation(b):
    """Rotation A = cayley(e*B) over Q(e), for nonzero rational skew B.

    Checked before returning: A != +-I, A^T A = I, det A = 1, and
    frob_sq(I - A) is infinitesimal.
    """
    _require_rational_skew(b, nonzero=True)
    a = cayley(eps * b)
    i = Mat.identity(b.n)
    ok = (
        a != i
        and a != -i
        and is_orthogonal(a)
        and det(a) == 1
        and is_infinitesimal(frob_sq(i - a))
    )
    if not ok:
        raise ArithmeticError("near-identity construction failed its guarantees")
    return a


@dataclass(frozen=True)
class NeumannReport:
    """Outcome of `neumann_check`."""

    m: int
    d: Mat
    identity_holds: bool
    gap_sq: object  # frob_sq of (I+eB)^-1 - D
    gap_infinitesimal: bool


def neumann_check(b, m):
    """Verify (I+eB) D = I + e^m B^m exactly for odd m, with
    D = sum_{k<m} (-eB)^k, and report the inverse-truncation gap."""
    if not isinstance(m, int) or m < 1 or m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    _require_rational_skew(b, nonzero=False)
    eb = eps * b
    i = Mat.identity(b.n)
    d = i
    term = i
    for _ in range(m - 1):
        term = term @ (-eb)
        d = d + term
    identity_holds = (i + eb) @ d == i + (eps**m) * (b**m)
    gap = inverse(i + eb) - d
    gap_sq = frob_sq(gap)
    return NeumannReport(m, d, identity_holds, gap_sq, is_infinitesimal(gap_sq))
