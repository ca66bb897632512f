"""Exponent tuples of Verma monomials and their bijection with KN tableaux.

A tuple ``a = (a1, a2, a3, a4)`` stands for ``f1^a4 f2^a3 f1^a2 f2^a1 v``.
Every half-integer quantity is handled by doubling, so nothing here rounds.
"""
from __future__ import annotations

from .core import ConsistencyError, HighestWeight, InputError, VermaTuple, WeightVec
from .tableaux import Tableau, is_kn_sp4

VERIFY_TABLEAUX = True


def is_valid_tuple(a, hw: HighestWeight) -> bool:
    a1, a2, a3, a4 = a
    m1, m2 = hw.m1, hw.m2
    return (
        0 <= a1 <= m2
        and 0 <= a2 <= m1 + 2 * a1
        and 0 <= a3 <= a2
        and 2 * a3 <= a2 + m1
        and 0 <= a4 <= min(m1, a3)
    )


def enumerate_tuples(hw: HighestWeight) -> list[VermaTuple]:
    """All valid tuples in lexicographic order."""
    m1, m2 = hw.m1, hw.m2
    out = []
    for a1 in range(m2 + 1):
        for a2 in range(m1 + 2 * a1 + 1):
            for a3 in range(min(a2, (a2 + m1) // 2) + 1):
                for a4 in range(min(m1, a3) + 1):
                    out.append(VermaTuple(a1, a2, a3, a4))
    return out


def bijection_case(a, hw: HighestWeight) -> str:
    """Which of the three constructions builds ``T(a)``: ``"odd"``, ``"even"`` or ``"low"``."""
    d = a[1] - hw.m1
    if d < 0:
        return "low"
    return "odd" if d % 2 else "even"


def _row_counts(a, hw: HighestWeight) -> tuple[list[int], list[int]]:
    """Multiplicities of (1, 2, 2bar, 1bar) in each row of ``T(a)``."""
    a1, a2, a3, a4 = a
    m1, m2 = hw.m1, hw.m2
    case = bijection_case(a, hw)
    if case == "low":
        top = [m1 + m2 - a2, a2 - a3, a3 - a4, a4]
        bottom = [0, m2 - a1, a1, 0]
    else:
        # k = number of 1bar in row two; the odd case forces one extra 2 in row one
        odd = 1 if case == "odd" else 0
        k = (a2 - m1 - odd) // 2
        top = [m2 - k - odd, m1 - a3 + k + odd, a3 - a4, a4]
        bottom = [0, m2 - a1, a1 - k, k]
    return top, bottom


def tuple_to_tableau(a, hw: HighestWeight) -> Tableau:
    """The KN tableau ``T(a)`` matched to a valid tuple."""
    a = VermaTuple.of(a)
    if not is_valid_tuple(a, hw):
        raise InputError(f"{tuple(a)} violates the inequalities for {hw}")
    top, bottom = _row_counts(a, hw)
    if min(top) < 0 or min(bottom) < 0:
        raise ConsistencyError(f"negative count building T{tuple(a)}: {top} / {bottom}")
    letters = (1, 2, -2, -1)
    rows = (
        tuple(x for x, c in zip(letters, top) for _ in range(c)),
        tuple(x for x, c in zip(letters, bottom) for _ in range(c)),
    )
    T = Tableau(rows, 2)
    if T.shape != tuple(x for x in hw.partition if x):
        raise ConsistencyError(f"T{tuple(a)} has shape {T.shape}, expected {hw.partition}")
    if VERIFY_TABLEAUX and not is_kn_sp4(T):
        raise ConsistencyError(f"T{tuple(a)} = {T.rows} is not a KN tableau")
    return T


def tableau_to_tuple(T: Tableau) -> VermaTuple:
    """Read the exponents off a KN tableau by threshold counts."""
    if T.n != 2 or not is_kn_sp4(T):
        raise InputError(f"{T.rows} is not an sp4 KN tableau")
    row1 = T.rows[0] if T.rows else ()
    row2 = T.rows[1] if len(T.rows) > 1 else ()
    above = {1: (2, -2, -1), 2: (-2, -1), -2: (-1,)}
    a1 = sum(x in above[2] for x in row2)
    a2 = sum(x in above[1] for x in row1) + sum(x in above[-2] for x in row2)
    a3 = sum(x in above[2] for x in row1)
    a4 = sum(x in above[-2] for x in row1)
    return VermaTuple(a1, a2, a3, a4)


def verma_weight(a, hw: HighestWeight) -> WeightVec:
    """Weight of ``f^a v``: lambda minus a1, a3 copies of 2 eps2 and a2, a4 copies of eps1 - eps2."""
    a1, a2, a3, a4 = a
    m1, m2 = hw.m1, hw.m2
    return WeightVec(m1 + m2 - a2 - a4, m2 - 2 * a1 + a2 - 2 * a3 + a4)


def monomial_string(a) -> str:
    """``"f1^a4 f2^a3 f1^a2 f2^a1 v"`` with zero powers dropped and unit powers bare."""
    a1, a2, a3, a4 = a
    parts = []
    for gen, e in (("f1", a4), ("f2", a3), ("f1", a2), ("f2", a1)):
        if e == 1:
            parts.append(gen)
        elif e > 1:
            parts.append(f"{gen}^{e}")
    return " ".join(parts + ["v"])
