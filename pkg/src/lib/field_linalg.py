"""Dense linear algebra over F_p and F_p[tau]/(tau^2 - tau - 1) with numpy.

Matrices are passed in and out as nested lists of field codes. Internally an
element a + b*tau is split into two int64 component arrays; every product of
residues is reduced mod p before it is added, so p < 2^31 keeps all
intermediates inside int64.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from src.models.errors import SingularSubstitution
from src.models.field import FieldSpec

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


def to_arrays(field_spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> Tuple[np.ndarray, np.ndarray]:
    """Split a code matrix into (a, b) component arrays.

    Over a prime field every entry is read as an integer mod p.
    """
    p = field_spec.p
    codes = np.asarray(matrix, dtype=np.int64)
    if codes.ndim != 2:
        codes = codes.reshape(len(matrix), -1)
    if not field_spec.extended:
        return codes % p, np.zeros_like(codes)
    return codes % p, (codes // p) % p


def from_arrays(field_spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> Matrix:
    return (a + b * field_spec.p).astype(np.int64).tolist()


def _eliminate(field_spec: FieldSpec, a: np.ndarray, b: np.ndarray,
               reduced: bool) -> List[int]:
    """Gauss-Jordan elimination in place; returns the pivot columns."""
    p = field_spec.p
    extended = field_spec.extended
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero((a[r:, c] != 0) | (b[r:, c] != 0))[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
            b[[r, pivot]] = b[[pivot, r]]

        inv = field_spec.inv(int(a[r, c]) + int(b[r, c]) * p)
        ia, ib = inv % p, inv // p
        ra, rb = a[r].copy(), b[r].copy()
        if extended:
            a[r] = (ia * ra % p + ib * rb % p) % p
            b[r] = (ia * rb % p + ib * ra % p + ib * rb % p) % p
        else:
            a[r] = ia * ra % p

        targets = np.arange(rows) if reduced else np.arange(r + 1, rows)
        targets = targets[targets != r]
        targets = targets[(a[targets, c] != 0) | (b[targets, c] != 0)]
        if targets.size:
            fa = a[targets, c][:, None]
            pa = a[r][None, :]
            if extended:
                fb = b[targets, c][:, None]
                pb = b[r][None, :]
                prod_a = (fa * pa % p + fb * pb % p) % p
                prod_b = (fa * pb % p + fb * pa % p + fb * pb % p) % p
                a[targets] = (a[targets] - prod_a) % p
                b[targets] = (b[targets] - prod_b) % p
            else:
                a[targets] = (a[targets] - fa * pa % p) % p
        pivots.append(c)
        r += 1
    return pivots


def row_reduce(field_spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    if len(matrix) == 0:
        return [], []
    a, b = to_arrays(field_spec, matrix)
    pivots = _eliminate(field_spec, a, b, reduced=True)
    return from_arrays(field_spec, a, b), pivots


def rank(field_spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a code matrix."""
    if len(matrix) == 0 or len(matrix[0]) == 0:
        return 0
    a, b = to_arrays(field_spec, matrix)
    return len(_eliminate(field_spec, a, b, reduced=False))


def inverse(field_spec: FieldSpec, matrix: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a square code matrix.

    Raises:
        SingularSubstitution: the matrix is not invertible
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError(f"Expected a square matrix, got {n} rows of lengths {[len(r) for r in matrix]}")
    a, b = to_arrays(field_spec, matrix)
    a = np.hstack([a, np.eye(n, dtype=np.int64)])
    b = np.hstack([b, np.zeros((n, n), dtype=np.int64)])
    pivots = _eliminate(field_spec, a, b, reduced=True)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularSubstitution(f"Matrix of size {n} has rank {sum(1 for c in pivots if c < n)}")
    return from_arrays(field_spec, a[:, n:], b[:, n:])


def multiply(field_spec: FieldSpec, left: Sequence[Sequence[int]],
             right: Sequence[Sequence[int]]) -> Matrix:
    """Matrix product of two code matrices (small sizes)."""
    add = field_spec.add_rows
    mul = field_spec.mul_rows
    result = []
    for row in left:
        out = []
        for j in range(len(right[0])):
            acc = 0
            for k, x in enumerate(row):
                acc = add[acc][mul[x][right[k][j]]]
            out.append(acc)
        result.append(out)
    return result
