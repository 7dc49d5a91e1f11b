"""Exact classification of the intersection curve of two quadric
surfaces in real projective 3-space.

The public surface is small: ``classify`` takes two lists of ten
rational coefficients and returns the morphology of the intersection
curve, decided entirely in exact integer/rational arithmetic.
"""

from .classify import (CASES, ClassificationResult, Disambiguator,
                       MorphologyCase, case_by_id, classify, classify_pencil,
                       disambiguate, minimal_poly_annihilates)
from .errors import (DegeneratePencil, DegreeTooLow, NonRationalCoefficient,
                     NotARoot, ParseError, ProportionalForms, QsicError,
                     TableMiss, ZeroForm, ZeroPolynomial)
from .pencil import (Pencil, QuadricForm, characteristic_polynomial,
                     eigencurve_of_pair, make_pencil, quadric_from_coeffs)
from .polynomials import (IntPolynomial, discriminant, poly_gcd, resultant,
                          sign_variations, square_free_decomposition,
                          square_free_part, sturm_habicht_sequence)
from .realroots import IsolatedRoot, isolate_real_roots, refine
from .sequence import (CanonicalKey, RootMark, SignatureSequence,
                       build_signature_sequence, canonicalize,
                       parse_signature_sequence)
from .signature import Inertia, sign_at_root, signature_at, signature_at_root

__version__ = "0.1.0"

__all__ = [
    "CASES", "CanonicalKey", "ClassificationResult", "DegeneratePencil",
    "DegreeTooLow", "Disambiguator", "Inertia", "IntPolynomial",
    "IsolatedRoot", "MorphologyCase", "NonRationalCoefficient", "NotARoot",
    "ParseError", "Pencil", "ProportionalForms", "QsicError", "QuadricForm",
    "RootMark", "SignatureSequence", "TableMiss", "ZeroForm",
    "ZeroPolynomial", "build_signature_sequence", "canonicalize",
    "case_by_id", "characteristic_polynomial", "classify", "classify_pencil",
    "disambiguate", "discriminant", "eigencurve_of_pair",
    "isolate_real_roots", "make_pencil", "minimal_poly_annihilates",
    "parse_signature_sequence", "poly_gcd", "quadric_from_coeffs", "refine",
    "resultant", "sign_at_root", "sign_variations", "signature_at",
    "signature_at_root", "square_free_decomposition", "square_free_part",
    "sturm_habicht_sequence",
]
