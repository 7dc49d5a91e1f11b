"""Quadric forms and the pencil lambda*A - B.

A quadric in projective 3-space is given by ten rational coefficients in
the fixed monomial order

    [x^2, y^2, z^2, w^2, xy, xz, xw, yz, yw, zw]

and is represented by its symmetric 4x4 matrix (off-diagonal entries are
half the mixed coefficients).  ``make_pencil`` normalizes a pair of such
forms to primitive integer matrices (A, B) with det(A) != 0, swapping in
a nonsingular member of the pencil if the first form is singular, and
precomputes the characteristic polynomial

    f(lambda) = det(lambda*A - B)

together with the full eigenvalue-curve coefficients c3..c0 of

    det(lambda*A - B - u*I) = u^4 + c3(lambda)*u^3 + c2(lambda)*u^2
                              + c1(lambda)*u + c0(lambda),

whose sign data drives the whole classification (c0 = f).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd, lcm
from typing import Sequence

from .errors import DegeneratePencil, ProportionalForms, ZeroForm
from .polynomials import IntPolynomial

COEFF_ORDER = ("x2", "y2", "z2", "w2", "xy", "xz", "xw", "yz", "yw", "zw")

# (row, col) slot for each mixed-term coefficient, 0-based
_MIXED_SLOTS = {"xy": (0, 1), "xz": (0, 2), "xw": (0, 3),
                "yz": (1, 2), "yw": (1, 3), "zw": (2, 3)}

IntMatrix = tuple[tuple[int, ...], ...]

# Substitution values tried when det(A) = 0: lambda0 with
# f(lambda0) != 0 exists among these whenever f is not identically zero,
# because deg f <= 4 < 10.
PROBE_VALUES = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5)


@dataclass(frozen=True)
class QuadricForm:
    """A quadric, kept both as the ten input coefficients and as the
    symmetric matrix of the associated bilinear form."""

    coeffs: tuple[Fraction, ...]
    matrix: tuple[tuple[Fraction, ...], ...]


def quadric_from_coeffs(coeffs: Sequence) -> QuadricForm:
    if len(coeffs) != 10:
        raise ValueError(f"expected 10 coefficients, got {len(coeffs)}")
    cs = tuple(Fraction(c) for c in coeffs)
    if all(c == 0 for c in cs):
        raise ZeroForm("all ten coefficients are zero")
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for i in range(4):
        m[i][i] = cs[i]
    for k, name in enumerate(COEFF_ORDER[4:], start=4):
        r, c = _MIXED_SLOTS[name]
        m[r][c] = m[c][r] = cs[k] / 2
    return QuadricForm(cs, tuple(tuple(row) for row in m))


def integer_matrix(q: QuadricForm) -> IntMatrix:
    """Clear denominators and divide by the entry gcd; sign is kept."""
    den = lcm(*(e.denominator for row in q.matrix for e in row))
    ints = [[e.numerator * (den // e.denominator) for e in row] for row in q.matrix]
    g = 0
    for row in ints:
        for e in row:
            g = int_gcd(g, abs(e))
    return tuple(tuple(e // g for e in row) for row in ints)


# ---------------------------------------------------------------------
# polynomial-entry determinants
# ---------------------------------------------------------------------

def _poly_entry(a: int, b: int) -> IntPolynomial:
    # entry of lambda*A - B
    return IntPolynomial([-b, a])

def _det_poly(entries: list[list[IntPolynomial]]) -> IntPolynomial:
    """Determinant of a small matrix of polynomials, by cofactor expansion."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    acc = IntPolynomial([])
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [[entries[r][c] for c in range(n) if c != j]
                 for r in range(1, n)]
        term = entries[0][j] * _det_poly(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def eigencurve_of_pair(a: IntMatrix, b: IntMatrix
                       ) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial]:
    """(c3, c2, c1, c0) for det(lambda*a - b - u*I), as polynomials in lambda.

    With e_k(lambda) the sum of k x k principal minors of lambda*a - b:
    c3 = -e1, c2 = e2, c1 = -e3, c0 = e4 = det.
    """
    entries = [[_poly_entry(a[i][j], b[i][j]) for j in range(4)] for i in range(4)]
    e = {1: IntPolynomial([]), 2: IntPolynomial([]), 3: IntPolynomial([])}
    for k in (1, 2, 3):
        for idx in itertools.combinations(range(4), k):
            sub = [[entries[r][c] for c in idx] for r in idx]
            e[k] = e[k] + _det_poly(sub)
    c0 = _det_poly(entries)
    return -e[1], e[2], -e[3], c0


def _det_int(m: IntMatrix) -> int:
    total = 0
    for perm in itertools.permutations(range(4)):
        sign = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if perm[i] > perm[j]:
                    sign = -sign
        total += sign * m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]]
    return total


# ---------------------------------------------------------------------
# pencil construction
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Pencil:
    """Normalized pencil lambda*A - B with det(A) != 0.

    ``basis_change`` records how (A, B) was obtained from the
    denominator-cleared input pair (A0, B0):
    A = p*A0 + q*B0, B = r*A0 + s*B0 for ((p, q), (r, s)).
    """

    A: IntMatrix
    B: IntMatrix
    f: IntPolynomial
    c3: IntPolynomial
    c2: IntPolynomial
    c1: IntPolynomial
    c0: IntPolynomial
    basis_change: tuple[tuple[int, int], tuple[int, int]]

    @property
    def eigencurve(self) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial]:
        return (self.c3, self.c2, self.c1, self.c0)

    def form_at(self, lam: Fraction) -> tuple[tuple[Fraction, ...], ...]:
        """The pencil member lambda*A - B as an exact rational matrix."""
        return tuple(tuple(Fraction(lam) * a - b for a, b in zip(ra, rb))
                     for ra, rb in zip(self.A, self.B))


def _proportional(a: IntMatrix, b: IntMatrix) -> bool:
    # both are primitive integer matrices, so proportional means b = +-a
    neg = tuple(tuple(-e for e in row) for row in a)
    return b == a or b == neg


def make_pencil(qa: QuadricForm, qb: QuadricForm) -> Pencil:
    a0 = integer_matrix(qa)
    b0 = integer_matrix(qb)
    if _proportional(a0, b0):
        raise ProportionalForms("the two quadrics define the same surface")

    c3, c2, c1, c0 = eigencurve_of_pair(a0, b0)
    if c0.is_zero():
        raise DegeneratePencil("det(lambda*A - B) vanishes identically")

    if _det_int(a0) != 0:
        return Pencil(a0, b0, c0, c3, c2, c1, c0, ((1, 0), (0, 1)))

    # A0 is singular: substitute a nonsingular member for the lead form.
    for lam0 in PROBE_VALUES:
        if c0(lam0) != 0:
            new_a = tuple(tuple(lam0 * a - b for a, b in zip(ra, rb))
                          for ra, rb in zip(a0, b0))
            new_b = a0
            n3, n2, n1, n0 = eigencurve_of_pair(new_a, new_b)
            return Pencil(new_a, new_b, n0, n3, n2, n1, n0,
                          ((lam0, -1), (1, 0)))
    raise DegeneratePencil(
        "no nonsingular member found among the probe values "
        "(characteristic polynomial vanished at all of them)")


def characteristic_polynomial(pencil: Pencil) -> IntPolynomial:
    return pencil.f
