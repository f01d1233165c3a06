"""
Small exact calculations shared by the engine
"""

from typing import List, Optional, Sequence

import numpy as np


def solve_mod_p(columns: Sequence[Sequence[int]], target: Sequence[int], p: int) -> Optional[List[int]]:
    """
    Solve ``sum_j m_j * columns[j] == target (mod p)`` for m with entries in [0, p)

    Args:
        columns: Column vectors (all the same length)
        target: Right-hand side vector
        p: Prime modulus

    Returns:
        One solution as a list, or None when the system is inconsistent
    """
    rows = len(target)
    unknowns = len(columns)
    if unknowns == 0:
        return [] if all(int(v) % p == 0 for v in target) else None
    matrix = np.zeros((rows, unknowns + 1), dtype=np.int64)
    for j, column in enumerate(columns):
        if len(column) != rows:
            raise ValueError("column length does not match target length")
        matrix[:, j] = np.asarray(column, dtype=np.int64) % p
    matrix[:, unknowns] = np.asarray(target, dtype=np.int64) % p

    pivots = []
    row = 0
    for col in range(unknowns):
        candidates = np.nonzero(matrix[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        matrix[[row, pivot]] = matrix[[pivot, row]]
        inverse = pow(int(matrix[row, col]), -1, p)
        matrix[row] = (matrix[row] * inverse) % p
        for other in range(rows):
            if other != row and matrix[other, col] != 0:
                matrix[other] = (matrix[other] - matrix[other, col] * matrix[row]) % p
        pivots.append(col)
        row += 1
        if row == rows:
            break

    # inconsistent: a zero row with a nonzero right-hand side
    for r in range(row, rows):
        if matrix[r, unknowns] != 0:
            return None

    solution = [0] * unknowns
    for r, col in enumerate(pivots):
        solution[col] = int(matrix[r, unknowns])
    return solution



def solve_linear(matrix: Sequence[Sequence], target: Sequence) -> Optional[List]:
    """
    Gauss-Jordan elimination over a field whose values provide ``is_zero()``

    Args:
        matrix: Rows of coefficients, one row per equation
        target: Right-hand side, one value per equation

    Returns:
        One solution (free unknowns set to zero), or None when inconsistent
    """
    if len(matrix) != len(target):
        raise ValueError("matrix and target have different numbers of rows")
    if not matrix:
        return []
    rows = [list(row) + [value] for row, value in zip(matrix, target)]
    unknowns = len(rows[0]) - 1 if rows else 0
    pivots = []
    row = 0
    for col in range(unknowns):
        pivot = next((r for r in range(row, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        lead = rows[row][col]
        rows[row] = [value / lead for value in rows[row]]
        for other in range(len(rows)):
            factor = rows[other][col]
            if other != row and not factor.is_zero():
                rows[other] = [a - factor * b for a, b in zip(rows[other], rows[row])]
        pivots.append(col)
        row += 1
        if row == len(rows):
            break

    for r in range(row, len(rows)):
        if not rows[r][unknowns].is_zero():
            return None
    zero = target[0] - target[0]
    solution = [zero] * unknowns
    for r, col in enumerate(pivots):
        solution[col] = rows[r][unknowns]
    return solution


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over F_p; p must stay below 2^31"""
    if not matrix:
        return 0
    work = np.asarray(matrix, dtype=np.int64) % p
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        candidates = np.nonzero(work[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        work[[rank, pivot]] = work[[pivot, rank]]
        work[rank] = (work[rank] * pow(int(work[rank, col]), -1, p)) % p
        for other in range(rank + 1, rows):
            if work[other, col] != 0:
                work[other] = (work[other] - work[other, col] * work[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def first_dependent_row(rows: Sequence[Sequence]) -> Optional[int]:
    """Index of the first row in the span of the rows before it, over a field of ``is_zero()`` values"""
    basis = []
    for k, row in enumerate(rows):
        row = list(row)
        for col, reduced in basis:
            factor = row[col]
            if not factor.is_zero():
                row = [a - factor * b for a, b in zip(row, reduced)]
        pivot = next((col for col, value in enumerate(row) if not value.is_zero()), None)
        if pivot is None:
            return k
        lead = row[pivot]
        basis.append((pivot, [value / lead for value in row]))
    return None
