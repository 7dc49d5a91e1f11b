"""Dense univariate polynomials over the integers, with the exact
subroutines the classifier needs: primitive-PRS gcd, Yun square-free
decomposition, resultants/discriminants, and generalized Sturm chains.

Coefficients are arbitrary-precision Python ints, stored low degree
first.  Rational scalars appear only transiently (evaluation, exact
division); every stored polynomial is integral.  All remainder chains
are kept primitive and are rescaled by *positive* constants only, so
sign patterns -- the only thing the callers consume -- are preserved.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence, Union

from .errors import DegreeTooLow, ZeroPolynomial

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Immutable dense polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``lambda**i``; trailing zeros are
    stripped so the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate by Horner's rule; always returns a Fraction."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; sign of the leading coefficient is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(c // g for c in self.coeffs)

    def monic_primitive(self) -> "IntPolynomial":
        """Primitive part with a positive leading coefficient."""
        p = self.primitive()
        if not p.is_zero() and p.lead < 0:
            p = -p
        return p

    def __repr__(self) -> str:
        if self.is_zero():
            return "IntPolynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*L")
            else:
                terms.append(f"{c}*L^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def poly_from_string_coeffs(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------
# pseudo-division and gcd
# ---------------------------------------------------------------------

def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, int]:
    """Return ``(r, m)`` with ``m * a == q*b + r`` for some integer q-poly,
    ``deg r < deg b``, and ``m = lead(b)**(deg a - deg b + 1)``.

    If ``deg a < deg b`` this degenerates to ``(a, 1)``.
    """
    if b.is_zero():
        raise ZeroPolynomial("pseudo-division by the zero polynomial")
    delta = a.degree - b.degree
    if delta < 0:
        return a, 1
    m = b.lead ** (delta + 1)
    r = list((a * m).coeffs)
    bc = b.coeffs
    for k in range(delta, -1, -1):
        top = r[b.degree + k] if b.degree + k < len(r) else 0
        if top == 0:
            continue
        q, rem = divmod(top, b.lead)
        assert rem == 0, "pseudo-remainder bookkeeping went wrong"
        for j, bj in enumerate(bc):
            r[j + k] -= q * bj
    return IntPolynomial(r[: b.degree if b.degree > 0 else 0]), m


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[lambda], leading coefficient positive.

    Primitive PRS: contents are stripped after every pseudo-remainder
    step, which keeps coefficient growth tame at these degrees.
    """
    if a.is_zero() and b.is_zero():
        return IntPolynomial([])
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r, _ = pseudo_remainder(f, g)
        f, g = g, r.primitive()
    return f.monic_primitive()


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient a/b when b divides a exactly in Z[lambda]."""
    if b.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    if a.is_zero():
        return IntPolynomial([])
    quo = [Fraction(0)] * (a.degree - b.degree + 1)
    rem = [Fraction(c) for c in a.coeffs]
    for k in range(a.degree - b.degree, -1, -1):
        c = rem[b.degree + k] / b.lead
        quo[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[j + k] -= c * bj
    if any(rem):
        raise ValueError("division is not exact")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ValueError("exact quotient is not integral")
        out.append(c.numerator)
    return IntPolynomial(out)


# ---------------------------------------------------------------------
# square-free structure
# ---------------------------------------------------------------------

def square_free_part(f: IntPolynomial) -> IntPolynomial:
    """f / gcd(f, f'), primitive with positive leading coefficient.

    Same real (and complex) roots as f, all simple.
    """
    if f.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if f.degree == 0:
        return IntPolynomial([1])
    g = poly_gcd(f, f.derivative())
    return exact_div(f.primitive(), g).monic_primitive()


def square_free_decomposition(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: return ``[(g1, 1), (g2, 2), ...]`` with each
    ``gi`` square-free, pairwise coprime, positive leading coefficient,
    and ``f = c * prod(gi**i)`` for a rational constant c.  Factors equal
    to 1 are omitted.
    """
    if f.is_zero():
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    p = f.monic_primitive()
    if p.degree == 0:
        return []
    out: list[tuple[IntPolynomial, int]] = []
    df = p.derivative()
    a = poly_gcd(p, df)
    b = exact_div(p, a)
    c = exact_div(df, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b2 = exact_div(b, g)
        c2 = exact_div(d, g)
        d = c2 - b2.derivative()
        b = b2
        i += 1
    return out


# ---------------------------------------------------------------------
# resultant / discriminant
# ---------------------------------------------------------------------

def resultant(a: IntPolynomial, b: IntPolynomial) -> int:
    """Sylvester resultant, computed by fraction-free-enough Gaussian
    elimination over exact rationals (the determinant of an integer
    matrix, so the result is an integer).
    """
    if a.is_zero() or b.is_zero():
        return 0
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return a.lead ** n
    if n == 0:
        return b.lead ** m
    size = m + n
    rows: list[list[Fraction]] = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in ac]
                    + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in bc]
                    + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] / pv
                for c2 in range(col, size):
                    rows[r][c2] -= factor * rows[col][c2]
    assert det.denominator == 1
    return det.numerator


def discriminant(f: IntPolynomial) -> int:
    """Res(f, f'); zero exactly when f has a repeated (complex) root."""
    if f.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    if f.degree < 1:
        raise DegreeTooLow("discriminant needs degree >= 1")
    return resultant(f, f.derivative())


# ---------------------------------------------------------------------
# sign machinery
# ---------------------------------------------------------------------

def sign_variations(values: Sequence[Scalar]) -> int:
    """Number of sign changes after deleting zeros."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_habicht_sequence(p: IntPolynomial, g: IntPolynomial) -> list[IntPolynomial]:
    """Generalized Sturm chain for the pair (p, p'*g).

    Successive elements are the negated Euclidean remainders, stored as
    primitive integer polynomials (each one a positive rational multiple
    of the exact remainder, so every sign evaluation agrees with the
    rational chain).  For a square-free p and points a < b that are not
    roots of p, ``V(a) - V(b)`` over the chain equals the number of roots
    of p in (a, b) weighted by the sign of g there.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    s1 = (p.derivative() * g).primitive()
    if s1.is_zero():
        return chain
    chain.append(s1)
    while True:
        a, b = chain[-2], chain[-1]
        r, m = pseudo_remainder(a, b)
        if r.is_zero():
            break
        # m*a = q*b + r, so the Euclidean remainder is r/m; the chain
        # wants a positive multiple of -r/m.
        nxt = -r if m > 0 else r
        chain.append(nxt.primitive())
    return chain


def variations_at(chain: Sequence[IntPolynomial], x: Scalar) -> int:
    return sign_variations([q(x) for q in chain])
