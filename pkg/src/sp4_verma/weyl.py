"""Weyl dimension formula for type C2, used as an independent counting oracle."""
from __future__ import annotations

from .core import InputError


def weyl_dim(l1: int, l2: int) -> int:
    """Dimension of the irreducible sp4-module with partition ``(l1, l2)``.

    In epsilon coordinates with ``rho = (2, 1)`` the positive roots are
    ``e1 - e2, 2 e2, e1 + e2, 2 e1``, giving

        (l1 - l2 + 1)(l2 + 1)(l1 + l2 + 3)(l1 + 2) / 6.
    """
    if not (isinstance(l1, int) and isinstance(l2, int)) or not l1 >= l2 >= 0:
        raise InputError(f"({l1}, {l2}) is not a partition with at most two parts")
    num = (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) * (l1 + l2 + 3)
    q, r = divmod(num, 6)
    assert r == 0, (l1, l2, num)
    return q
