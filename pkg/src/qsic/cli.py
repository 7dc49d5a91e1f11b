"""Command-line interface.

Input formats (auto-detected):

  * text: two non-comment lines, one quadric per line, each holding ten
    whitespace-separated rationals ("3", "-1/2") in the coefficient
    order [x2 y2 z2 w2 xy xz xw yz yw zw].  Floating-point literals are
    rejected: the classifier is exact and refuses to guess.
  * JSON: an object {"A": [...10 strings/ints...], "B": [...]}.

Commands:

  classify FILE [--json]   morphology report for the intersection curve
  sequence FILE            signature sequence and canonical key
  eigencurve FILE --svg OUT [--range LO HI]
                           plot of the four eigenvalue branches
  corpus                   classify the built-in representative pairs

Exit codes: 0 success, 2 parse error, 3 degenerate pencil,
4 proportional forms, 5 zero form.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .classify import CASES, ClassificationResult, classify
from .errors import (DegeneratePencil, NonRationalCoefficient, ParseError,
                     ProportionalForms, ZeroForm)
from .pencil import Pencil, make_pencil, quadric_from_coeffs
from .realroots import isolate_real_roots
from .numeric import numeric_eigenvalues
from .sequence import build_signature_sequence, canonicalize

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_PROPORTIONAL = 4
EXIT_ZERO_FORM = 5

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


@dataclass(frozen=True)
class InputDocument:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]


def _parse_token(tok: str) -> Fraction:
    if not _RATIONAL_RE.match(tok):
        raise NonRationalCoefficient(
            f"coefficient {tok!r} is not an integer or p/q rational")
    return Fraction(tok)


def _parse_coeff_list(values, label: str) -> tuple[Fraction, ...]:
    if not isinstance(values, list) or len(values) != 10:
        raise ParseError(f"{label}: expected a list of 10 coefficients")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise NonRationalCoefficient(
                f"{label}: coefficient {v!r} is not an integer or p/q string")
        out.append(_parse_token(str(v)))
    return tuple(out)


def parse_input(text: str) -> InputDocument:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON input: {exc}") from None
        if not isinstance(doc, dict) or "A" not in doc or "B" not in doc:
            raise ParseError('JSON input needs keys "A" and "B"')
        return InputDocument(_parse_coeff_list(doc["A"], "A"),
                             _parse_coeff_list(doc["B"], "B"))
    lines = [ln for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 2:
        raise ParseError(f"expected exactly 2 quadric lines, got {len(lines)}")
    quadrics = []
    for ln in lines:
        toks = ln.split()
        if len(toks) != 10:
            raise ParseError(f"expected 10 coefficients per line, got {len(toks)}")
        quadrics.append(tuple(_parse_token(t) for t in toks))
    return InputDocument(quadrics[0], quadrics[1])


def emit_input(doc: InputDocument) -> str:
    def fmt(c: Fraction) -> str:
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return (" ".join(fmt(c) for c in doc.a) + "\n"
            + " ".join(fmt(c) for c in doc.b) + "\n")


def report_dict(result: ClassificationResult) -> dict:
    return {
        "case": result.case.id,
        "segre": result.case.segre,
        "signature_sequence": str(result.sequence),
        "description": result.case.description,
        "disambiguator": result.disambiguator.value,
    }


# ---------------------------------------------------------------------
# eigencurve rendering
# ---------------------------------------------------------------------

def render_eigencurve_svg(pencil: Pencil, lo: float, hi: float,
                          width: int = 640, height: int = 480,
                          samples: int = 240) -> str:
    if not lo < hi:
        raise ValueError("empty lambda range")
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    branches: list[list[float]] = [[] for _ in range(4)]
    for x in xs:
        for k, e in enumerate(numeric_eigenvalues(pencil, x).eigenvalues):
            branches[k].append(e)
    ymin = min(min(b) for b in branches)
    ymax = max(max(b) for b in branches)
    if ymax - ymin < 1e-12:
        ymin, ymax = ymin - 1.0, ymax + 1.0
    pad = 0.05 * (ymax - ymin)
    ymin, ymax = ymin - pad, ymax + pad

    def px(x: float) -> float:
        return (x - lo) / (hi - lo) * (width - 40) + 20

    def py(y: float) -> float:
        return height - 20 - (y - ymin) / (ymax - ymin) * (height - 40)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             f'<rect width="{width}" height="{height}" fill="white"/>']
    if ymin < 0 < ymax:
        parts.append(f'<line x1="{px(lo):.2f}" y1="{py(0):.2f}" '
                     f'x2="{px(hi):.2f}" y2="{py(0):.2f}" '
                     f'stroke="#888" stroke-width="1"/>')
    for r in isolate_real_roots(pencil.f):
        rx = float(r.midpoint())
        if lo <= rx <= hi:
            parts.append(f'<line x1="{px(rx):.2f}" y1="20" '
                         f'x2="{px(rx):.2f}" y2="{height - 20}" '
                         f'stroke="#d88" stroke-width="1" '
                         f'stroke-dasharray="4 3"/>')
    colors = ("#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd")
    for branch, color in zip(branches, colors):
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, branch))
        parts.append(f'<polyline points="{pts}" fill="none" '
                     f'stroke="{color}" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def _default_range(pencil: Pencil) -> tuple[float, float]:
    roots = isolate_real_roots(pencil.f)
    if not roots:
        return -3.0, 3.0
    lo = float(roots[0].lo) - 1.0
    hi = float(roots[-1].hi) + 1.0
    return lo, hi


# ---------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_classify(args) -> int:
    doc = parse_input(_read(args.file))
    result = classify(doc.a, doc.b)
    rep = report_dict(result)
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        for k, v in rep.items():
            print(f"{k}: {v}")
    return EXIT_OK


def _cmd_sequence(args) -> int:
    doc = parse_input(_read(args.file))
    pencil = make_pencil(quadric_from_coeffs(doc.a), quadric_from_coeffs(doc.b))
    seq = build_signature_sequence(pencil)
    print(f"sequence: {seq}")
    print(f"canonical_key: {canonicalize(seq)}")
    return EXIT_OK


def _cmd_eigencurve(args) -> int:
    doc = parse_input(_read(args.file))
    pencil = make_pencil(quadric_from_coeffs(doc.a), quadric_from_coeffs(doc.b))
    if args.range is not None:
        lo, hi = args.range
    else:
        lo, hi = _default_range(pencil)
    svg = render_eigencurve_svg(pencil, lo, hi)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    ok = 0
    for case in CASES:
        result = classify(case.pair[0], case.pair[1])
        good = result.case.id == case.id
        ok += good
        status = "ok" if good else f"MISMATCH -> case {result.case.id}"
        print(f"case {case.id:2d} {case.segre:12s} {status}  {result.sequence}")
    print(f"{ok}/{len(CASES)} representative pairs classified to their own case")
    return EXIT_OK if ok == len(CASES) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qsic",
        description="Exact classification of the intersection curve "
                    "of two quadric surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify a quadric pair")
    p_classify.add_argument("file", help="input file, or - for stdin")
    p_classify.add_argument("--json", action="store_true",
                            help="machine-readable report")
    p_classify.set_defaults(func=_cmd_classify)

    p_seq = sub.add_parser("sequence", help="print the signature sequence")
    p_seq.add_argument("file", help="input file, or - for stdin")
    p_seq.set_defaults(func=_cmd_sequence)

    p_eig = sub.add_parser("eigencurve", help="render the eigenvalue curve")
    p_eig.add_argument("file", help="input file, or - for stdin")
    p_eig.add_argument("--svg", required=True, help="output SVG path")
    p_eig.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"),
                       help="lambda range (default: around the real roots)")
    p_eig.set_defaults(func=_cmd_eigencurve)

    p_corpus = sub.add_parser("corpus",
                              help="classify the built-in representatives")
    p_corpus.set_defaults(func=_cmd_corpus)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonRationalCoefficient as exc:
        print(f"error: non-rational coefficient: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegeneratePencil as exc:
        print(f"error: degenerate pencil: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ProportionalForms as exc:
        print(f"error: proportional forms: {exc}", file=sys.stderr)
        return EXIT_PROPORTIONAL
    except ZeroForm as exc:
        print(f"error: zero form: {exc}", file=sys.stderr)
        return EXIT_ZERO_FORM


if __name__ == "__main__":
    sys.exit(main())
