"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def rank(rows: Sequence[Sequence[int]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        p = m[rk][col]
        for i in range(rk + 1, len(m)):
            a = m[i][col]
            row = m[i]
            top = m[rk]
            # exact division: Bareiss guarantees divisibility by the previous pivot
            m[i] = [(p * row[j] - a * top[j]) // prev for j in range(ncols)]
        prev = p
        rk += 1
        if rk == len(m):
            break
    return rk


def sparse_rank(vectors: Sequence[dict]) -> int:
    """Rank of sparse vectors given as ``{coordinate: int}`` dicts."""
    keys = sorted({k for v in vectors for k in v})
    index = {k: j for j, k in enumerate(keys)}
    dense = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        dense.append(row)
    return rank(dense)
