"""Inertia of pencil members, computed from sign data alone.

The eigenvalue curve det(lambda*A - B - u*I) = u^4 + c3*u^3 + ... + c0
has, for each fixed lambda, the four eigenvalues of lambda*A - B as its
roots in u.  Descartes' rule applied to this quartic (which has only
real roots) is exact: the number of positive eigenvalues equals the sign
variations of [1, c3, c2, c1, c0] and the number of negative ones the
variations of [1, -c3, c2, -c1, c0].  At a root of the characteristic
polynomial the same rule runs on the truncated list, and the signs of
the c_i at an irrational root come from a generalized Sturm chain over
its isolating interval -- no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotARoot
from .pencil import Pencil
from .polynomials import (IntPolynomial, sign_variations,
                          sturm_habicht_sequence, variations_at)
from .realroots import IsolatedRoot


@dataclass(frozen=True)
class Inertia:
    """Counts of positive / negative / zero eigenvalues; p + n + z = 4."""

    p: int
    n: int
    z: int

    def __post_init__(self):
        assert self.p + self.n + self.z == 4


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def signature_at(pencil: Pencil, lam: Union[int, Fraction]) -> Inertia:
    """Inertia of the member lambda*A - B at an exact rational lambda."""
    c3, c2, c1, c0 = (c(lam) for c in pencil.eigencurve)
    p = sign_variations([1, c3, c2, c1, c0])
    n = sign_variations([1, -c3, c2, -c1, c0])
    return Inertia(p, n, 4 - p - n)


def sign_at_root(g: IntPolynomial, root: IsolatedRoot) -> int:
    """Sign of g at the root described by ``root`` (-1, 0, or +1).

    Rational roots are evaluated directly; irrational ones through the
    Sturm chain of (p, p'*g) over the isolating interval, which contains
    exactly one root of p, so the weighted count *is* the sign.
    """
    if root.value is not None:
        return _sign(g(root.value))
    if g.is_zero():
        return 0
    chain = sturm_habicht_sequence(root.p, g)
    return variations_at(chain, root.lo) - variations_at(chain, root.hi)


def signature_at_root(pencil: Pencil, root: IsolatedRoot) -> Inertia:
    """Inertia of the singular member at a characteristic root.

    There c0 vanishes, so Descartes' rule runs on [1, c3, c2, c1]; the
    zero count z = 4 - p - n is then >= 1 (the corank of the member).
    """
    if sign_at_root(pencil.f, root) != 0:
        raise NotARoot("the given point is not a characteristic root")
    s3 = sign_at_root(pencil.c3, root)
    s2 = sign_at_root(pencil.c2, root)
    s1 = sign_at_root(pencil.c1, root)
    p = sign_variations([1, s3, s2, s1])
    n = sign_variations([1, -s3, s2, -s1])
    return Inertia(p, n, 4 - p - n)
