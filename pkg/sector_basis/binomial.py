# -*- coding: utf-8 -*-
"""
Pascal table of binomial coefficients, built once up to the bitmask cap.
"""

from typing import List

from utils.errors import CapacityError

BINOMIAL_CAP = 64
INDEX_MAX = 2 ** 63 - 1


def _build_table(n_max: int) -> List[List[int]]:
    table = [[1]]
    for n in range(1, n_max + 1):
        prev = table[-1]
        row = [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]
        if max(row) > INDEX_MAX:
            raise CapacityError(f"binomial table overflows int64 at n={n}")
        table.append(row)
    return table


_TABLE = _build_table(BINOMIAL_CAP)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    if n > BINOMIAL_CAP:
        raise CapacityError(f"binomial: n={n} exceeds table cap {BINOMIAL_CAP}")
    return _TABLE[n][k]
