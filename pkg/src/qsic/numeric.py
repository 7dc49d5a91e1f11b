"""Floating-point cross-checks for the exact machinery.

Nothing in the classifier depends on this module; it exists so tests
and the eigencurve renderer can compare the exact sign computations
against a plain numerical eigensolver.  The solver is cyclic Jacobi on
the symmetric 4x4 member lambda*A - B, which is simple, dependency-free
and accurate to near machine precision for such tiny matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .pencil import Pencil


def jacobi_eigenvalues(matrix: Sequence[Sequence[float]],
                       tol: float = 1e-14, max_sweeps: int = 50) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    returned in increasing order."""
    n = len(matrix)
    a = [list(map(float, row)) for row in matrix]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n)
                            for j in range(n) if i != j))
        scale = max(1.0, math.sqrt(sum(a[i][j] ** 2 for i in range(n)
                                       for j in range(n))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p][q] == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q])
                t = math.copysign(1.0, theta) / (abs(theta)
                                                 + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    return sorted(a[i][i] for i in range(n))


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: tuple[float, ...]


def numeric_eigenvalues(pencil: Pencil, lam: Union[int, float, Fraction]
                        ) -> NumericSpectrum:
    lam = float(lam)
    member = [[lam * a - b for a, b in zip(ra, rb)]
              for ra, rb in zip(pencil.A, pencil.B)]
    return NumericSpectrum(tuple(jacobi_eigenvalues(member)))


def numeric_signature(pencil: Pencil, lam: Union[int, float, Fraction],
                      tol: float = 1e-9) -> Optional[tuple[int, int, int]]:
    """(p, n, z) by thresholded eigenvalue signs, or None when any
    eigenvalue falls inside the +-tol dead band (inconclusive)."""
    eigs = numeric_eigenvalues(pencil, lam).eigenvalues
    scale = max(1.0, max(abs(e) for e in eigs))
    if any(abs(e) <= tol * scale for e in eigs):
        return None
    p = sum(1 for e in eigs if e > 0)
    n = sum(1 for e in eigs if e < 0)
    return p, n, 4 - p - n
