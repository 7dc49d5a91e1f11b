"""Exact isolation of the real roots of an integer polynomial.

Strategy: work on the square-free part p of f.  Rational roots are
pulled out first by the rational-root test and recorded exactly; the
deflated remainder (which then has only irrational roots) is isolated by
bisection with classical Sturm counts, starting from the Cauchy bound.
Every returned interval has rational endpoints that are not roots of f,
contains exactly one root, and p changes sign across it.  The
multiplicity of each root in f is read off Yun's square-free
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .errors import ZeroPolynomial
from .polynomials import (IntPolynomial, exact_div, square_free_decomposition,
                          square_free_part, sturm_habicht_sequence,
                          variations_at)


@dataclass(frozen=True)
class IsolatedRoot:
    """One real root of f, known exactly (``value``) when rational, and
    otherwise pinned to the open interval (lo, hi).

    ``p`` is the square-free part of f: it changes sign across (lo, hi)
    and has no other root there.  ``mult`` is the multiplicity in f.
    """

    p: IntPolynomial
    lo: Fraction
    hi: Fraction
    mult: int
    value: Optional[Fraction] = None

    def midpoint(self) -> Fraction:
        return self.value if self.value is not None else (self.lo + self.hi) / 2


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


def _rational_roots(p: IntPolynomial) -> list[Fraction]:
    """All rational roots of p (square-free, so each appears once)."""
    roots = []
    q = p
    if q[0] == 0:
        roots.append(Fraction(0))
        q = exact_div(q, IntPolynomial([0, 1]))
    if q.degree >= 1:
        seen = set()
        for num in _divisors(q[0]):
            for den in _divisors(q.lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in seen:
                        seen.add(cand)
                        if q(cand) == 0:
                            roots.append(cand)
    return sorted(roots)


def _deflate(p: IntPolynomial, roots: list[Fraction]) -> IntPolynomial:
    q = p
    for r in roots:
        q = exact_div(q, IntPolynomial([-r.numerator, r.denominator]))
    return q


def _cauchy_bound(p: IntPolynomial) -> int:
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    bound = 1 + (m + abs(p.lead) - 1) // abs(p.lead)
    return bound


def isolate_real_roots(f: IntPolynomial) -> list[IsolatedRoot]:
    """Isolating data for every real root of f, in increasing order."""
    if f.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if f.degree == 0:
        return []
    p = square_free_part(f)
    rational = _rational_roots(p)
    q = _deflate(p, rational)

    intervals: list[tuple[Fraction, Fraction]] = []
    if q.degree >= 1:
        chain = sturm_habicht_sequence(q, IntPolynomial([1]))
        bound = _cauchy_bound(q)
        stack = [(Fraction(-bound), Fraction(bound))]
        while stack:
            lo, hi = stack.pop()
            # q has no rational roots, so rational endpoints are safe
            n = variations_at(chain, lo) - variations_at(chain, hi)
            if n == 0:
                continue
            crowded = any(lo <= r <= hi for r in rational)
            if n == 1 and not crowded:
                intervals.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            stack.append((lo, mid))
            stack.append((mid, hi))

    # Give each exact rational root a sign-change interval disjoint from
    # everything else.
    positions = sorted([(lo, hi, None) for lo, hi in intervals]
                       + [(r, r, r) for r in rational])
    roots: list[IsolatedRoot] = []
    mults = _multiplicity_table(f)
    for i, (lo, hi, val) in enumerate(positions):
        if val is not None:
            radius = Fraction(1)
            if i > 0:
                radius = min(radius, (val - positions[i - 1][1]) / 2)
            if i + 1 < len(positions):
                radius = min(radius, (positions[i + 1][0] - val) / 2)
            lo, hi = val - radius, val + radius
            while p(lo) == 0 or p(hi) == 0 or p(lo) * p(hi) > 0:
                radius /= 2
                lo, hi = val - radius, val + radius
        roots.append(IsolatedRoot(p, lo, hi, _find_mult(mults, p, lo, hi, val), val))
    return sorted(roots, key=lambda r: r.midpoint())


def _multiplicity_table(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    return square_free_decomposition(f)


def _find_mult(mults: list[tuple[IntPolynomial, int]], p: IntPolynomial,
               lo: Fraction, hi: Fraction, val: Optional[Fraction]) -> int:
    for g, m in mults:
        if val is not None:
            if g(val) == 0:
                return m
        elif g(lo) * g(hi) < 0:
            # the interval isolates a single root of p, so a sign change
            # of the (square-free) factor g pins the root on g
            return m
    raise AssertionError("root not matched to a square-free factor")


def refine(root: IsolatedRoot, max_width: Fraction) -> IsolatedRoot:
    """Shrink the isolating interval to width <= max_width, preserving
    all invariants.  Exact rational roots just get a narrower symmetric
    interval."""
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    lo, hi = root.lo, root.hi
    if root.value is not None:
        radius = min((hi - lo) / 2, max_width / 2)
        lo, hi = root.value - radius, root.value + radius
        while root.p(lo) == 0 or root.p(hi) == 0 or root.p(lo) * root.p(hi) > 0:
            radius /= 2
            lo, hi = root.value - radius, root.value + radius
        return replace(root, lo=lo, hi=hi)
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        v = root.p(mid)
        if v == 0:
            # the root turned out to be rational after all
            return refine(replace(root, value=mid), max_width)
        if root.p(lo) * v < 0:
            hi = mid
        else:
            lo = mid
    return replace(root, lo=lo, hi=hi)
