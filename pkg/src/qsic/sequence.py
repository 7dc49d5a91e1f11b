"""Signature sequences of a pencil and their canonical form.

The signature sequence records, across the real projective lambda-line,
the index (number of positive eigenvalues) of lambda*A - B on each
segment between characteristic roots, together with the inertia (p, n)
of the singular member at each root, nested in parentheses as deep as
the root's multiplicity:

    (s0, (..(p1, n1)..), s1, ..., (..(pr, nr)..), sr)

Two sequences describe projectively equivalent pencils when they agree
up to rotation around the projective line, reversal of direction, and
global negation of the pencil.  All three are captured at once by a
double cover of the projective circle: going once around, the r roots
and r + 1 segments are laid out twice, the second copy complemented
(index s -> 4 - s, root (p, n) -> (n, p)) because the pencil member
returns negated after passing through lambda = infinity.  The canonical
key is the lexicographically smallest linearization of that cyclic word
over all start points and both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import QsicError
from .pencil import Pencil
from .realroots import isolate_real_roots
from .signature import signature_at, signature_at_root


@dataclass(frozen=True)
class RootMark:
    """Inertia data attached to one real characteristic root."""

    mult: int
    p: int
    n: int


@dataclass(frozen=True)
class SignatureSequence:
    segments: tuple[int, ...]
    roots: tuple[RootMark, ...]

    def __post_init__(self):
        if len(self.segments) != len(self.roots) + 1:
            raise ValueError("need exactly one more segment than roots")

    def __str__(self) -> str:
        parts = [str(self.segments[0])]
        for mark, seg in zip(self.roots, self.segments[1:]):
            parts.append("(" * mark.mult + f"{mark.p},{mark.n}" + ")" * mark.mult)
            parts.append(str(seg))
        return "(" + ",".join(parts) + ")"


def parse_signature_sequence(text: str) -> SignatureSequence:
    """Inverse of str(): parse '(1,((1,1)),3)' style notation."""
    s = text.replace(" ", "")
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed signature sequence: {text!r}")
    s = s[1:-1]
    segments: list[int] = []
    roots: list[RootMark] = []
    i = 0
    expect_segment = True
    while i < len(s):
        if expect_segment:
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            if j == i:
                raise ValueError(f"expected a segment index at {i} in {text!r}")
            segments.append(int(s[i:j]))
            i = j
        else:
            depth = 0
            while i < len(s) and s[i] == "(":
                depth += 1
                i += 1
            if depth == 0:
                raise ValueError(f"expected a root mark at {i} in {text!r}")
            j = s.index(")", i)
            p_str, n_str = s[i:j].split(",")
            for _ in range(depth):
                if s[j] != ")":
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                j += 1
            roots.append(RootMark(depth, int(p_str), int(n_str)))
            i = j
        expect_segment = not expect_segment
        if i < len(s):
            if s[i] != ",":
                raise ValueError(f"expected ',' at {i} in {text!r}")
            i += 1
    return SignatureSequence(tuple(segments), tuple(roots))


# ---------------------------------------------------------------------
# construction from a pencil
# ---------------------------------------------------------------------

def build_signature_sequence(pencil: Pencil) -> SignatureSequence:
    roots = isolate_real_roots(pencil.f)
    if not roots:
        s = signature_at(pencil, Fraction(0)).p
        return SignatureSequence((s,), ())

    samples = [roots[0].lo - 1]
    for left, right in zip(roots, roots[1:]):
        if left.hi < right.lo:
            samples.append((left.hi + right.lo) / 2)
        elif left.hi == right.lo:
            samples.append(left.hi)
        else:
            raise QsicError("isolating intervals overlap")
    samples.append(roots[-1].hi + 1)

    segments = tuple(signature_at(pencil, x).p for x in samples)
    marks = []
    for r in roots:
        inertia = signature_at_root(pencil, r)
        marks.append(RootMark(r.mult, inertia.p, inertia.n))

    if segments[0] + segments[-1] != 4:
        raise QsicError("outer segments do not complement to 4; "
                        "sequence construction is inconsistent")
    return SignatureSequence(segments, tuple(marks))


# ---------------------------------------------------------------------
# canonicalization
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalKey:
    """Order-comparable, hashable encoding of the equivalence class."""

    word: tuple

    def __str__(self) -> str:
        items = []
        for elem in self.word:
            if elem[0] == "a":
                items.append(str(elem[1]))
            else:
                _, mult, p, n = elem
                items.append(f"({mult}:{p},{n})")
        return " ".join(items)


def canonicalize(seq: SignatureSequence) -> CanonicalKey:
    r = len(seq.roots)
    if r == 0:
        s = min(seq.segments[0], 4 - seq.segments[0])
        return CanonicalKey((("a", s),))

    # double cover: the second copy is the complement
    roots = [(m.mult, m.p, m.n) for m in seq.roots] \
        + [(m.mult, m.n, m.p) for m in seq.roots]
    arcs = [seq.segments[i + 1] for i in range(r)] \
        + [4 - seq.segments[i + 1] for i in range(r)]
    size = 2 * r

    best = None
    for start in range(size):
        for forward in (True, False):
            if forward:
                cand = [("a", arcs[(start - 1) % size])]
                for k in range(r):
                    cand.append(("r",) + roots[(start + k) % size])
                    cand.append(("a", arcs[(start + k) % size]))
            else:
                cand = [("a", arcs[start])]
                for k in range(r):
                    cand.append(("r",) + roots[(start - k) % size])
                    cand.append(("a", arcs[(start - k - 1) % size]))
            t = tuple(cand)
            if best is None or t < best:
                best = t
    return CanonicalKey(best)
