# -*- coding: utf-8 -*-
"""
Exact rank of an integer matrix by Bareiss fraction-free elimination.

After each pivot step every remaining entry is a minor of the input, so the
division by the previous pivot is exact. Work starts in int64 and moves to
Python integers as soon as the next step could overflow.
"""

import numpy as np

INT64_MAX = np.iinfo(np.int64).max


def exact_rank(matrix) -> int:
    """Rank over the rationals of an integer matrix, computed without rounding"""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2 or a.size == 0:
        return 0
    n_rows, n_cols = a.shape
    promoted = False
    previous = 1
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.nonzero(a[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            a[[row, pivot_row]] = a[[pivot_row, row]]

        if not promoted:
            bound = int(np.abs(a[row:, col:]).max())
            if 2 * bound * bound > INT64_MAX:
                a = a.astype(object)
                promoted = True

        pivot = int(a[row, col])
        if row + 1 < n_rows:
            below = a[row + 1:, col].copy()
            a[row + 1:, col + 1:] = (pivot * a[row + 1:, col + 1:] - np.outer(below, a[row, col + 1:])) // previous
            a[row + 1:, col] = 0
        previous = pivot
        row += 1
    return row
