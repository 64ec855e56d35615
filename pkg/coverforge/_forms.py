from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form as _domain_smith_normal_form

IntMatrix = Sequence[Sequence[int]]


def to_domain_matrix(matrix: IntMatrix) -> DomainMatrix:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in matrix], (rows, cols), ZZ)


def smith_normal_form(matrix: IntMatrix) -> Tuple[List[int], int]:
    """Invariant factors of the cokernel of an integer matrix

    Parameters
    ----------
    matrix
        Integer matrix, given as a list of rows.

    Returns
    -------
    Tuple[List[int], int]
        The invariant factors greater than 1, in divisibility order, and the rank.
        The free rank of the cokernel is `len(matrix) - rank`.
    """
    if len(matrix) == 0:
        return [], 0

    normal_form = _domain_smith_normal_form(to_domain_matrix(matrix)).to_Matrix()
    diagonal = [abs(int(normal_form[i, i])) for i in range(min(normal_form.shape))]

    rank = sum(1 for value in diagonal if value != 0)
    factors = sorted(value for value in diagonal if value > 1)

    return factors, rank


def signature(matrix: IntMatrix) -> int:
    """Number of positive minus number of negative eigenvalues of a symmetric matrix

    Computed by congruence diagonalization over the rationals. When every remaining
    diagonal entry vanishes, a hyperbolic 2x2 block is split off instead.
    """
    work = [[Fraction(int(v)) for v in row] for row in matrix]
    if any(len(row) != len(work) for row in work):
        raise ValueError('signature needs a square matrix')
    if any(work[i][j] != work[j][i] for i in range(len(work)) for j in range(i)):
        raise ValueError('signature needs a symmetric matrix')

    total = 0
    while work:
        size = len(work)
        pivot = next((i for i in range(size) if work[i][i] != 0), None)

        if pivot is not None:
            d = work[pivot][pivot]
            total += 1 if d > 0 else -1
            rest = [r for r in range(size) if r != pivot]
            work = [
                [work[r][c] - work[r][pivot] * work[pivot][c] / d for c in rest]
                for r in rest
            ]
            continue

        pair = next(((i, j) for i in range(size) for j in range(i + 1, size) if work[i][j] != 0), None)
        if pair is None:
            break

        # [[0, b], [b, 0]] has one positive and one negative eigenvalue
        i, j = pair
        b = work[i][j]
        rest = [r for r in range(size) if r not in pair]
        work = [
            [work[r][c] - (work[r][i] * work[j][c] + work[r][j] * work[i][c]) / b for c in rest]
            for r in rest
        ]

    return total
