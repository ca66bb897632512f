"""Tableaux over the barred alphabet and Kashiwara-Nakashima validity.

Validity is a predicate, not a constructor invariant: the tensor model also
works with column-strict fillings that are not KN.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterator, Sequence

from .core import HighestWeight, InputError, WeightVec, check_entry, entry_key, partition_of


@dataclass(frozen=True)
class Tableau:
    """A left-justified filling with weakly decreasing row lengths.

    ``rows`` holds signed-integer letters of rank ``n``; the empty tableau has
    no rows. Zero-length rows are dropped so the shape is a genuine partition.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int = 2

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if len(rows) > self.n:
            raise InputError(f"{len(rows)} rows exceed rank {self.n}")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise InputError(f"row lengths {[len(r) for r in rows]} are not weakly decreasing")
        for row in rows:
            for x in row:
                check_entry(x, self.n)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (0-based), top to bottom."""
        return tuple(r[j] for r in self.rows if j < len(r))

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [self.column(j) for j in range(width)]

    def __str__(self):
        from .io import tableau_ascii

        return tableau_ascii(self)


def is_semistandard(T: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase, in the barred order."""
    n = T.n
    for row in T.rows:
        if any(entry_key(a, n) > entry_key(b, n) for a, b in zip(row, row[1:])):
            return False
    return is_column_strict(T)


def is_column_strict(T: Tableau) -> bool:
    n = T.n
    for col in T.columns():
        if any(entry_key(a, n) >= entry_key(b, n) for a, b in zip(col, col[1:])):
            return False
    return True


def check_one_bar_pairs(T: Tableau) -> bool:
    """Every column holding both ``i`` and ``i-bar`` has ``p + q <= i``.

    ``p`` counts from the top to ``i``, ``q`` from the bottom to ``i-bar``.
    """
    for col in T.columns():
        h = len(col)
        for r, x in enumerate(col):
            if x > 0 and -x in col:
                p = r + 1
                q = h - col.index(-x)
                if p + q > x:
                    return False
    return True


def _rows_of(col: Sequence[int]) -> dict[int, int]:
    return {x: r + 1 for r, x in enumerate(col)}


def check_adjacent_columns(T: Tableau) -> bool:
    """The two-column condition on every adjacent pair.

    For ``i <= j`` and rows ``p <= q < r <= s`` the configurations are

    * left has ``i`` at p; right has ``j`` at q, ``j-bar`` at r, ``i-bar`` at s;
    * left has ``i`` at p, ``j`` at q, ``j-bar`` at r; right has ``i-bar`` at s;

    and each occurrence must satisfy ``(q - p) + (s - r) < j - i``. When
    ``i == j`` the boxes of ``j`` and ``i`` (or ``j-bar`` and ``i-bar``) coincide.
    """
    n = T.n
    cols = T.columns()
    for left, right in zip(cols, cols[1:]):
        L, R = _rows_of(left), _rows_of(right)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                # configuration with the j-chain in the right column
                if i in L and j in R and -j in R and -i in R:
                    p, q, r, s = L[i], R[j], R[-j], R[-i]
                    if p <= q < r <= s and (q - p) + (s - r) >= j - i:
                        return False
                # configuration with the j-chain in the left column
                if i in L and j in L and -j in L and -i in R:
                    p, q, r, s = L[i], L[j], L[-j], R[-i]
                    if p <= q < r <= s and (q - p) + (s - r) >= j - i:
                        return False
    return True


def is_kn(T: Tableau) -> bool:
    """Kashiwara-Nakashima validity for any rank."""
    return is_semistandard(T) and check_one_bar_pairs(T) and check_adjacent_columns(T)


# --- rank-2 specialization -------------------------------------------------

_ORDER4 = {1: 0, 2: 1, -2: 2, -1: 3}


def _sp4_column_ok(col: Sequence[int]) -> bool:
    if len(col) == 2:
        a, b = col
        return _ORDER4[a] < _ORDER4[b] and not (a == 1 and b == -1)
    return True


def _sp4_pair_ok(left: Sequence[int], right: Sequence[int]) -> bool:
    if any(_ORDER4[a] > _ORDER4[b] for a, b in zip(left, right)):
        return False
    if left[0] == 2 and tuple(right) == (2, -2):
        return False
    if tuple(left) == (2, -2) and len(right) == 2 and right[1] == -2:
        return False
    return True


def is_kn_sp4(T: Tableau) -> bool:
    """KN validity written directly for sp4.

    Semistandard, no column with both 1 and 1-bar, and neither forbidden
    adjacent pattern: a 2 on top of a column followed by the column (2, 2-bar),
    or the column (2, 2-bar) followed by a column with 2-bar in its second row.
    """
    if T.n != 2:
        raise InputError(f"the sp4 checker needs rank 2, got {T.n}")
    cols = T.columns()
    if not all(_sp4_column_ok(c) for c in cols):
        return False
    if not all(_sp4_pair_ok(a, b) for a, b in zip(cols, cols[1:])):
        return False
    return True


def enumerate_kn4(hw: HighestWeight) -> list[Tableau]:
    """All KN tableaux of shape ``(m1 + m2, m2)``, largest first under :func:`tableau_order`."""
    m1, m2 = hw.m1, hw.m2
    width = m1 + m2
    heights = [2] * m2 + [1] * m1
    letters = (1, 2, -2, -1)
    candidates = {
        1: [(x,) for x in letters],
        2: [c for c in itertools.combinations(letters, 2) if _sp4_column_ok(c)],
    }

    out: list[Tableau] = []

    def extend(j: int, right: tuple[int, ...] | None, acc: list[tuple[int, ...]]):
        if j < 0:
            cols = acc[::-1]
            rows = tuple(tuple(c[r] for c in cols if r < len(c)) for r in range(2))
            out.append(Tableau(rows, 2))
            return
        for col in candidates[heights[j]]:
            if right is None or _sp4_pair_ok(col, right):
                acc.append(col)
                extend(j - 1, col, acc)
                acc.pop()

    if width == 0:
        return [Tableau((), 2)]
    extend(width - 1, None, [])
    out.sort(key=tableau_sort_key, reverse=True)
    return out


def tableau_weight(T: Tableau) -> tuple[int, ...]:
    """``sum (k_i - k_ibar) eps_i``; a :class:`WeightVec` at rank 2."""
    w = [0] * T.n
    for row in T.rows:
        for x in row:
            w[abs(x) - 1] += 1 if x > 0 else -1
    return WeightVec(*w) if T.n == 2 else tuple(w)


def all_fillings(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """Every filling of ``shape`` by the rank-``n`` alphabet, valid or not."""
    letters = list(range(1, n + 1)) + list(range(-n, 0))
    cells = sum(shape)
    for flat in itertools.product(letters, repeat=cells):
        rows, k = [], 0
        for length in shape:
            rows.append(flat[k:k + length])
            k += length
        yield Tableau(tuple(rows), n)


def shapes_up_to(width: int, max_rows: int = 2) -> list[tuple[int, ...]]:
    """All partitions with at most ``max_rows`` parts and first part at most ``width``."""
    out = [()]
    for parts in range(1, max_rows + 1):
        for p in itertools.combinations_with_replacement(range(width, 0, -1), parts):
            out.append(p)
    return out


# --- total order on same-shape fillings --------------------------------------

def box_scan(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Admissible boxes ``(row, col)`` (1-based), smallest first.

    ``(i, j) < (i', j')`` when ``j > j'``, or ``j == j'`` and ``i < i'``:
    rightmost column first, top to bottom inside a column.
    """
    boxes = [(i + 1, j + 1) for i, length in enumerate(shape) for j in range(length)]
    return sorted(boxes, key=cmp_to_key(pair_order))


def pair_order(a: tuple[int, int], b: tuple[int, int]) -> int:
    (i, j), (i2, j2) = a, b
    if (i, j) == (i2, j2):
        return 0
    if j > j2 or (j == j2 and i < i2):
        return -1
    return 1


def tableau_sort_key(T: Tableau) -> tuple[int, ...]:
    """Entry keys read in box-scan order; lexicographic on this key is :func:`tableau_order`."""
    return tuple(entry_key(T.rows[i - 1][j - 1], T.n) for i, j in box_scan(T.shape))


def tableau_order(Y: Tableau, Z: Tableau) -> int:
    """Compare same-shape tableaux at the first differing box of the scan."""
    if Y.shape != Z.shape or Y.n != Z.n:
        raise InputError(f"cannot compare shapes {Y.shape} and {Z.shape}")
    for i, j in box_scan(Y.shape):
        y, z = entry_key(Y.rows[i - 1][j - 1], Y.n), entry_key(Z.rows[i - 1][j - 1], Z.n)
        if y != z:
            return -1 if y < z else 1
    return 0


def highest_weight_tableau(hw: HighestWeight) -> Tableau:
    """Row one all 1's, row two all 2's."""
    l1, l2 = partition_of(hw)
    return Tableau(((1,) * l1, (2,) * l2), 2)
