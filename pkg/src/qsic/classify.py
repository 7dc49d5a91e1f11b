"""Morphology classification of the intersection of two quadrics.

The pipeline: normalize the input pair to a pencil, build its signature
sequence, canonicalize, and look the key up in the shipped table of the
35 morphologies.  The raw table stores signature sequences exactly as
catalogued; keys are computed at load time by the same canonicalization
used on inputs, so the two can never drift apart.

Two keys are shared between morphologies that signature data cannot
separate, and are resolved algebraically:

  * no real characteristic root, key "(2)": a nonzero discriminant of f
    means a nonsingular quartic (case 4); otherwise f is a square of an
    irreducible quadratic g, and the curve contains real lines exactly
    when g annihilates A^-1 B (case 31 vs case 10).
  * quadruple root with inertia (1,1): f = lc*(lambda - a)^4; the
    double line is real with real crossing lines exactly when
    (lambda - a)^2 annihilates A^-1 B (case 35 vs case 26).

Both annihilation tests run fraction-free on M = adj(A)*B.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .errors import TableMiss
from .pencil import IntMatrix, Pencil, make_pencil, quadric_from_coeffs
from .polynomials import IntPolynomial, discriminant, square_free_part
from .sequence import (CanonicalKey, SignatureSequence,
                       build_signature_sequence, canonicalize,
                       parse_signature_sequence)


class Disambiguator(enum.Enum):
    NONE = "none"
    DISCRIMINANT_NONZERO = "discriminant-nonzero"
    MINPOLY_ANNIHILATES = "minimal-polynomial-annihilates"
    MINPOLY_FAILS = "minimal-polynomial-fails"
    QUAD_MINPOLY_ANNIHILATES = "double-root-minpoly-annihilates"
    QUAD_MINPOLY_FAILS = "double-root-minpoly-fails"


@dataclass(frozen=True)
class MorphologyCase:
    id: int
    segre: str
    description: str
    sequences: tuple[SignatureSequence, ...]
    pair: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class ClassificationResult:
    case: MorphologyCase
    sequence: SignatureSequence
    key: CanonicalKey
    disambiguator: Disambiguator
    pencil: Pencil


def _load_table() -> tuple[tuple[MorphologyCase, ...], dict]:
    raw = json.loads(resources.files("qsic").joinpath("cases.json").read_text())
    cases = []
    key_map: dict[CanonicalKey, list[int]] = {}
    for entry in raw["cases"]:
        seqs = tuple(parse_signature_sequence(s)
                     for s in entry["signature_sequences"])
        case = MorphologyCase(
            id=entry["id"],
            segre=entry["segre"],
            description=entry["description"],
            sequences=seqs,
            pair=(tuple(entry["pair"]["A"]), tuple(entry["pair"]["B"])),
        )
        cases.append(case)
        for seq in seqs:
            key = canonicalize(seq)
            ids = key_map.setdefault(key, [])
            if case.id not in ids:
                ids.append(case.id)
    return tuple(cases), key_map


CASES, _KEY_MAP = _load_table()
_CASE_BY_ID = {c.id: c for c in CASES}

# the two ambiguous keys, resolved by disambiguate()
_KEY_EMPTY = canonicalize(parse_signature_sequence("(2)"))
_KEY_QUAD_11 = canonicalize(parse_signature_sequence("(2,((((1,1)))),2)"))

_EXPECTED_COLLISIONS = {_KEY_EMPTY: {4, 10, 31}, _KEY_QUAD_11: {26, 35}}
for _key, _ids in _KEY_MAP.items():
    if len(_ids) > 1 and set(_ids) != _EXPECTED_COLLISIONS.get(_key):
        raise TableMiss(f"unexpected key collision {str(_key)!r} -> {_ids}")


def case_by_id(case_id: int) -> MorphologyCase:
    return _CASE_BY_ID[case_id]


# ---------------------------------------------------------------------
# fraction-free annihilation test
# ---------------------------------------------------------------------

def _adjugate(m: IntMatrix) -> list[list[int]]:
    def det3(rs, cs):
        (a, b, c), (d, e, f), (g, h, i) = \
            [[m[r][c0] for c0 in cs] for r in rs]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    adj = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            rs = [r for r in range(4) if r != j]
            cs = [c for c in range(4) if c != i]
            adj[i][j] = (-1) ** (i + j) * det3(rs, cs)
    return adj


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)]


def minimal_poly_annihilates(pencil: Pencil, g: IntPolynomial) -> bool:
    """Does g(A^-1 B) = 0?  Evaluated without leaving the integers:
    with M = adj(A)*B and d = det(A), g = a*x^2 + b*x + c annihilates
    A^-1 B iff a*M^2 + b*d*M + c*d^2*I = 0 (degree-1 g analogously)."""
    if g.degree not in (1, 2):
        raise ValueError("annihilation test expects degree 1 or 2")
    adj = _adjugate(pencil.A)
    m = _mat_mul(adj, pencil.B)
    d = sum(pencil.A[0][k] * adj[k][0] for k in range(4))
    if g.degree == 1:
        b, a = g[0], g[1]
        test = [[a * m[i][j] + b * d * (i == j) for j in range(4)]
                for i in range(4)]
    else:
        c, b, a = g[0], g[1], g[2]
        m2 = _mat_mul(m, m)
        test = [[a * m2[i][j] + b * d * m[i][j] + c * d * d * (i == j)
                 for j in range(4)] for i in range(4)]
    return all(e == 0 for row in test for e in row)


def disambiguate(pencil: Pencil, key: CanonicalKey) -> tuple[int, Disambiguator]:
    if key == _KEY_EMPTY:
        if discriminant(pencil.f) != 0:
            return 4, Disambiguator.DISCRIMINANT_NONZERO
        g = square_free_part(pencil.f)
        assert g.degree == 2, "repeated f without real roots must be a quadratic square"
        if minimal_poly_annihilates(pencil, g):
            return 31, Disambiguator.MINPOLY_ANNIHILATES
        return 10, Disambiguator.MINPOLY_FAILS
    if key == _KEY_QUAD_11:
        lin = square_free_part(pencil.f)
        assert lin.degree == 1, "quadruple root must leave a linear square-free part"
        g = lin * lin
        if minimal_poly_annihilates(pencil, g):
            return 35, Disambiguator.QUAD_MINPOLY_ANNIHILATES
        return 26, Disambiguator.QUAD_MINPOLY_FAILS
    raise ValueError("key is not ambiguous")


# ---------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------

def classify_pencil(pencil: Pencil) -> ClassificationResult:
    seq = build_signature_sequence(pencil)
    key = canonicalize(seq)
    ids = _KEY_MAP.get(key)
    if ids is None:
        raise TableMiss(f"no morphology matches canonical key {str(key)!r} "
                        f"(sequence {seq})")
    if len(ids) == 1:
        case_id, dis = ids[0], Disambiguator.NONE
    else:
        case_id, dis = disambiguate(pencil, key)
    return ClassificationResult(_CASE_BY_ID[case_id], seq, key, dis, pencil)


def classify(a_coeffs: Sequence, b_coeffs: Sequence) -> ClassificationResult:
    """Classify the intersection curve of the two quadrics given by their
    ten rational coefficients each."""
    pencil = make_pencil(quadric_from_coeffs(a_coeffs),
                         quadric_from_coeffs(b_coeffs))
    return classify_pencil(pencil)
