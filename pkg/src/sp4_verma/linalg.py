"""Exact rank of sparse integer matrices by fraction-free elimination."""
from __future__ import annotations

from math import gcd
from typing import Hashable, Iterable, Mapping


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def integer_rank(rows: Iterable[Mapping[Hashable, int]], key=None) -> int:
    """Rank over the rationals of sparse integer rows.

    Each incoming row is reduced against the stored pivot rows by the
    cross-multiplication ``p * row - row[c] * pivot`` and then divided by the
    gcd of its entries, so entries stay integral and small. ``key`` orders
    columns for pivot selection (smallest first); the rank does not depend on it.
    """
    pivots: dict = {}
    rank = 0
    for src in rows:
        row = _primitive({k: v for k, v in src.items() if v})
        while row:
            c = min(row, key=key) if key else min(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                rank += 1
                break
            p, r = prow[c], row[c]
            new = {k: p * v for k, v in row.items()}
            for k, v in prow.items():
                x = new.get(k, 0) - r * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return rank
