"""Shared vocabulary: the barred alphabet, highest weights and weight vectors.

Letters are encoded as signed integers: ``i`` is ``+i`` and ``i-bar`` is ``-i``.
For rank ``n`` the alphabet is ordered ``1 < 2 < ... < n < n-bar < ... < 1-bar``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed. Always a bug, never bad input."""


class BudgetExceeded(RuntimeError):
    """The requested computation is larger than the configured state budget."""


def check_entry(x: int, n: int) -> None:
    if not isinstance(x, int) or x == 0 or abs(x) > n:
        raise InputError(f"{x!r} is not a letter of the rank-{n} alphabet")


def entry_key(x: int, n: int) -> int:
    """Position of ``x`` in the ordered alphabet, starting at 1."""
    return x if x > 0 else 2 * n + 1 + x


def entry_compare(x: int, y: int, n: int) -> int:
    """Three-way comparison in the barred order: -1, 0 or 1."""
    check_entry(x, n)
    check_entry(y, n)
    kx, ky = entry_key(x, n), entry_key(y, n)
    return (kx > ky) - (kx < ky)


def alphabet(n: int) -> list[int]:
    """All letters of rank ``n`` in increasing order."""
    return list(range(1, n + 1)) + list(range(-n, 0))


def format_entry(x: int) -> str:
    """JSON spelling: ``"2"`` for 2, ``"2b"`` for 2-bar."""
    return str(x) if x > 0 else f"{-x}b"


def parse_entry(s: str, n: int) -> int:
    """Inverse of :func:`format_entry`. Case-sensitive; rejects 0 and out-of-rank letters."""
    if not isinstance(s, str):
        raise InputError(f"entry must be a string, got {s!r}")
    body, barred = (s[:-1], True) if s.endswith("b") else (s, False)
    if not body.isdigit() or body != str(int(body)):
        raise InputError(f"cannot parse entry {s!r}")
    x = -int(body) if barred else int(body)
    check_entry(x, n)
    return x


@dataclass(frozen=True)
class HighestWeight:
    """The dominant weight ``m1*omega_1 + m2*omega_2`` of sp4."""

    m1: int
    m2: int

    def __post_init__(self):
        for m in (self.m1, self.m2):
            if not isinstance(m, int) or m < 0:
                raise InputError(f"multiplicities must be nonnegative integers, got ({self.m1}, {self.m2})")

    @property
    def partition(self) -> tuple[int, int]:
        return partition_of(self)

    @property
    def weight(self) -> WeightVec:
        return WeightVec(self.m1 + self.m2, self.m2)


def partition_of(hw: HighestWeight) -> tuple[int, int]:
    """``(lambda_1, lambda_2) = (m1 + m2, m2)``."""
    return (hw.m1 + hw.m2, hw.m2)


class WeightVec(NamedTuple):
    """A weight in epsilon coordinates ``c1*eps_1 + c2*eps_2``."""

    c1: int
    c2: int

    def to_omega(self) -> tuple[int, int]:
        # c1*e1 + c2*e2 = (c1 - c2)*w1 + c2*w2; display only
        return (self.c1 - self.c2, self.c2)


SIMPLE_ROOTS = (WeightVec(1, -1), WeightVec(0, 2))
FUNDAMENTAL_WEIGHTS = (WeightVec(1, 0), WeightVec(1, 1))


class VermaTuple(NamedTuple):
    """Exponents of ``f1^a4 f2^a3 f1^a2 f2^a1``, innermost factor first."""

    a1: int
    a2: int
    a3: int
    a4: int

    @classmethod
    def of(cls, a) -> VermaTuple:
        t = cls(*a)
        if any(not isinstance(x, int) or x < 0 for x in t):
            raise InputError(f"exponents must be nonnegative integers, got {tuple(a)}")
        return t


class VerificationError(Exception):
    """A mathematical claim checked by this package did not hold."""
