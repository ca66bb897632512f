"""Exact model of L(lambda) inside W = V^(x m1) (x) (wedge^2 V)^(x m2).

The basis of V is relabeled as eps_1, eps_2, eps_2bar = eps_4, eps_1bar = -eps_3,
which makes every structure constant of the generators +1, 0 or -1 and the
lowering operators sign-free.

Internally a pure tensor is a tuple of slot codes: the first ``m1`` slots hold a
letter code (position of the letter in ``1 < 2 < 2bar < 1bar``), the last ``m2``
hold a pair code (position of ``(j, k)``, ``j < k``, in lexicographic order).
Read left to right this tuple visits the boxes of the matching tableau in the
order rightmost column first, top to bottom, so comparing code tuples
lexicographically is the tableau order. Vectors store each tuple packed into
one integer (mixed radix 4/6, first slot most significant), which preserves
that order.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Mapping, NamedTuple

from .core import (
    BudgetExceeded,
    HighestWeight,
    InputError,
    VerificationError,
    VermaTuple,
    WeightVec,
)
from .linalg import integer_rank
from .tableaux import Tableau, is_column_strict, tableau_order  # noqa: F401  (re-exported)
from .verma import enumerate_tuples, is_valid_tuple, tuple_to_tableau, verma_weight

GENERATORS = ("e1", "e2", "f1", "f2", "h1", "h2")

LETTERS = (1, 2, -2, -1)
LETTER_CODE = {x: i for i, x in enumerate(LETTERS)}
PAIRS = tuple(itertools.combinations(LETTERS, 2))
PAIR_CODE = {p: i for i, p in enumerate(PAIRS)}

# letter -> (row of the standard basis vector, sign) in the 4x4 realization
RELABEL = {1: (0, 1), 2: (1, 1), -2: (3, 1), -1: (2, -1)}

DEFAULT_BUDGET = 10**7


def _E(i: int, j: int) -> list[list[int]]:
    m = [[0] * 4 for _ in range(4)]
    m[i - 1][j - 1] = 1
    return m


def _lin(*terms: tuple[int, list[list[int]]]) -> list[list[int]]:
    return [[sum(c * m[r][s] for c, m in terms) for s in range(4)] for r in range(4)]


# sp4 generators as 4x4 matrices on the standard basis eps_1..eps_4
MATRICES = {
    "e1": _lin((1, _E(1, 2)), (-1, _E(4, 3))),
    "f1": _lin((1, _E(2, 1)), (-1, _E(3, 4))),
    "h1": _lin((1, _E(1, 1)), (-1, _E(2, 2)), (-1, _E(3, 3)), (1, _E(4, 4))),
    "e2": _E(2, 4),
    "f2": _E(4, 2),
    "h2": _lin((1, _E(2, 2)), (-1, _E(4, 4))),
}


def _letter_table(g: str) -> dict[int, list[tuple[int, int]]]:
    M = MATRICES[g]
    table = {}
    for x in LETTERS:
        col, sx = RELABEL[x]
        out = []
        for y in LETTERS:
            row, sy = RELABEL[y]
            c = sx * sy * M[row][col]
            if c:
                out.append((y, c))
        table[x] = out
    return table


LETTER_ACTION = {g: _letter_table(g) for g in GENERATORS}


def act_on_letter(g: str, x: int) -> list[tuple[int, int]]:
    """Image of ``eps_x`` under generator ``g`` as ``[(letter, coeff), ...]``."""
    if g not in LETTER_ACTION:
        raise InputError(f"unknown generator {g!r}")
    if x not in LETTER_CODE:
        raise InputError(f"{x!r} is not a rank-2 letter")
    return list(LETTER_ACTION[g][x])


def canonical_pair(j: int, k: int) -> tuple[tuple[int, int], int] | None:
    """``eps_j ^ eps_k`` as ``(increasing pair, sign)``, or None when ``j == k``."""
    if j == k:
        return None
    if LETTER_CODE[j] < LETTER_CODE[k]:
        return (j, k), 1
    return (k, j), -1


def _merge(terms) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for code, c in terms:
        acc[code] = acc.get(code, 0) + c
    return tuple((code, c) for code, c in sorted(acc.items()) if c)


def _slot_tables(g: str):
    word = tuple(_merge((LETTER_CODE[y], c) for y, c in LETTER_ACTION[g][x]) for x in LETTERS)
    wedge = []
    for j, k in PAIRS:
        terms = []
        for y, c in LETTER_ACTION[g][j]:
            cp = canonical_pair(y, k)
            if cp:
                terms.append((PAIR_CODE[cp[0]], c * cp[1]))
        for y, c in LETTER_ACTION[g][k]:
            cp = canonical_pair(j, y)
            if cp:
                terms.append((PAIR_CODE[cp[0]], c * cp[1]))
        wedge.append(_merge(terms))
    return word, tuple(wedge)


SLOT_TABLES = {g: _slot_tables(g) for g in GENERATORS}


def radices(m1: int, m2: int) -> list[int]:
    return [4] * m1 + [6] * m2


def pack(codes, m1: int, m2: int) -> int:
    key = 0
    for c, r in zip(codes, radices(m1, m2)):
        key = key * r + c
    return key


def unpack(key: int, m1: int, m2: int) -> tuple[int, ...]:
    out = []
    for r in reversed(radices(m1, m2)):
        key, c = divmod(key, r)
        out.append(c)
    return tuple(reversed(out))


class TensorIndex(NamedTuple):
    """A pure tensor ``eps_w1 (x) ... (x) (eps_j1 ^ eps_k1) (x) ...`` of W."""

    word: tuple[int, ...]
    wedges: tuple[tuple[int, int], ...]

    @property
    def ambient(self) -> tuple[int, int]:
        return (len(self.word), len(self.wedges))

    def key(self) -> int:
        """Packed slot codes; integer order is the tableau order."""
        return pack(self.codes(), *self.ambient)

    @classmethod
    def from_key(cls, key: int, ambient: tuple[int, int]) -> TensorIndex:
        return cls.from_codes(unpack(key, *ambient), ambient[0])

    def codes(self) -> tuple[int, ...]:
        try:
            return tuple(LETTER_CODE[x] for x in self.word) + tuple(PAIR_CODE[tuple(p)] for p in self.wedges)
        except KeyError as exc:
            raise InputError(f"not a canonical index: {self}") from exc

    @classmethod
    def from_codes(cls, codes, m1: int) -> TensorIndex:
        return cls(tuple(LETTERS[c] for c in codes[:m1]), tuple(PAIRS[c] for c in codes[m1:]))


def index_weight(ix: TensorIndex) -> WeightVec:
    w = [0, 0]
    for x in itertools.chain(ix.word, *ix.wedges):
        w[abs(x) - 1] += 1 if x > 0 else -1
    return WeightVec(*w)


class ExactVector:
    """Sparse integer combination of pure tensors of W.

    Treat instances as immutable; every operation returns a new vector.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: tuple[int, int], terms: Mapping[int, int] | None = None):
        self.ambient = (int(ambient[0]), int(ambient[1]))
        self._terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_terms(cls, ambient: tuple[int, int], terms: Mapping[TensorIndex, int]) -> ExactVector:
        """Build from indices whose wedge pairs may be unordered or degenerate.

        ``(k, j)`` with ``j < k`` contributes with the opposite sign and ``(j, j)``
        contributes nothing.
        """
        m1, m2 = ambient
        acc: dict[int, int] = {}
        for ix, c in terms.items():
            word, wedges = ix
            if len(word) != m1 or len(wedges) != m2:
                raise InputError(f"index {ix} does not live in ambient {ambient}")
            sign, pairs = 1, []
            for j, k in wedges:
                cp = canonical_pair(j, k)
                if cp is None:
                    sign = 0
                    break
                pairs.append(cp[0])
                sign *= cp[1]
            if sign:
                key = TensorIndex(tuple(word), tuple(pairs)).key()
                acc[key] = acc.get(key, 0) + sign * c
        return cls(ambient, acc)

    def items(self) -> Iterator[tuple[TensorIndex, int]]:
        for k, v in sorted(self._terms.items()):
            yield TensorIndex.from_key(k, self.ambient), v

    def coefficient(self, ix: TensorIndex) -> int:
        return self._terms.get(ix.key(), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: ExactVector):
        if self.ambient != other.ambient:
            raise InputError(f"ambients differ: {self.ambient} vs {other.ambient}")

    def __eq__(self, other):
        if not isinstance(other, ExactVector):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __add__(self, other: ExactVector) -> ExactVector:
        self._check(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return ExactVector(self.ambient, acc)

    def __neg__(self):
        return ExactVector(self.ambient, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: ExactVector) -> ExactVector:
        return self + (-other)

    def __rmul__(self, c: int) -> ExactVector:
        return ExactVector(self.ambient, {k: c * v for k, v in self._terms.items()})

    def __repr__(self):
        body = " + ".join(f"{v}*{ix}" for ix, v in itertools.islice(self.items(), 4))
        more = f" + ... ({len(self)} terms)" if len(self) > 4 else ""
        return f"ExactVector({self.ambient}, {body or '0'}{more})"


def basis_vector(ix: TensorIndex) -> ExactVector:
    return ExactVector(ix.ambient, {ix.key(): 1})


def _position_tables(g: str, m1: int, m2: int):
    """Per tensor slot, least significant first: (radix, per-digit ((key delta, coeff), ...))."""
    word_t, wedge_t = SLOT_TABLES[g]
    out, w = [], 1
    for r in reversed(radices(m1, m2)):
        table = word_t if r == 4 else wedge_t
        out.append((r, tuple(tuple(((new - d) * w, k) for new, k in table[d]) for d in range(r))))
        w *= r
    return out


_TABLE_CACHE: dict = {}


def act(g: str, v: ExactVector) -> ExactVector:
    """Apply a generator as a derivation across all tensor slots."""
    if g not in SLOT_TABLES:
        raise InputError(f"unknown generator {g!r}")
    ck = (g, v.ambient)
    tables = _TABLE_CACHE.get(ck)
    if tables is None:
        tables = _TABLE_CACHE[ck] = _position_tables(g, *v.ambient)
    out: dict[int, int] = {}
    get = out.get
    for key, c in v._terms.items():
        rem = key
        for r, table in tables:
            rem, d = divmod(rem, r)
            for dk, k in table[d]:
                nk = key + dk
                out[nk] = get(nk, 0) + c * k
    return ExactVector(v.ambient, out)


def act_power(g: str, v: ExactVector, e: int) -> ExactVector:
    for _ in range(e):
        if not v:
            break
        v = act(g, v)
    return v


def highest_weight_vector(hw: HighestWeight) -> ExactVector:
    """``eps_1^(x m1) (x) (eps_1 ^ eps_2)^(x m2)``."""
    return ExactVector((hw.m1, hw.m2), {0: 1})


def u_of_tableau(Y: Tableau) -> TensorIndex:
    """Pure tensor of a column-strict tableau of shape ``(m1 + m2, m2)``.

    Single boxes are read from the right end of row one; two-box columns are
    then read right to left as wedge pairs.
    """
    if Y.n != 2:
        raise InputError("the tensor model is rank 2 only")
    if not is_column_strict(Y):
        raise InputError(f"{Y.rows} is not column-strict")
    row1 = Y.rows[0] if Y.rows else ()
    row2 = Y.rows[1] if len(Y.rows) > 1 else ()
    m2 = len(row2)
    m1 = len(row1) - m2
    word = tuple(row1[m1 + m2 - t] for t in range(1, m1 + 1))
    wedges = tuple((row1[m2 - s], row2[m2 - s]) for s in range(1, m2 + 1))
    return TensorIndex(word, wedges)


def tableau_of_index(ix: TensorIndex) -> Tableau:
    """Inverse of :func:`u_of_tableau`."""
    word, wedges = ix
    row1 = tuple(p[0] for p in reversed(wedges)) + tuple(reversed(word))
    row2 = tuple(p[1] for p in reversed(wedges))
    return Tableau((row1, row2), 2)


def state_budget() -> int:
    env = os.environ.get("SYMP_VERMA_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"SYMP_VERMA_BUDGET={env!r} is not an integer") from exc
    return DEFAULT_BUDGET


def dim_W(hw: HighestWeight) -> int:
    return 4**hw.m1 * 6**hw.m2


def check_budget(hw: HighestWeight, budget: int | None = None) -> None:
    budget = state_budget() if budget is None else budget
    if dim_W(hw) > budget:
        raise BudgetExceeded(f"dim W = 4^{hw.m1} * 6^{hw.m2} = {dim_W(hw)} exceeds the budget {budget}")


def verma_vector(a, hw: HighestWeight, budget: int | None = None) -> ExactVector:
    """``f1^a4 f2^a3 f1^a2 f2^a1 v_lambda``, innermost factor applied first."""
    a = VermaTuple.of(a)
    if not is_valid_tuple(a, hw):
        raise InputError(f"{tuple(a)} violates the inequalities for {hw}")
    check_budget(hw, budget)
    v = highest_weight_vector(hw)
    for g, e in (("f2", a.a1), ("f1", a.a2), ("f2", a.a3), ("f1", a.a4)):
        v = act_power(g, v, e)
    return v


def verma_vectors(hw: HighestWeight, budget: int | None = None) -> Iterator[tuple[VermaTuple, ExactVector]]:
    """All Verma vectors in lexicographic tuple order, sharing common prefixes."""
    check_budget(hw, budget)
    m1, m2 = hw.m1, hw.m2
    v1 = highest_weight_vector(hw)
    for a1 in range(m2 + 1):
        if a1:
            v1 = act("f2", v1)
        v2 = v1
        for a2 in range(m1 + 2 * a1 + 1):
            if a2:
                v2 = act("f1", v2)
            v3 = v2
            for a3 in range(min(a2, (a2 + m1) // 2) + 1):
                if a3:
                    v3 = act("f2", v3)
                v4 = v3
                for a4 in range(min(m1, a3) + 1):
                    if a4:
                        v4 = act("f1", v4)
                    yield VermaTuple(a1, a2, a3, a4), v4


def leading_term(v: ExactVector) -> tuple[Tableau, int]:
    """Largest tableau in the support of ``v`` and its coefficient."""
    if not v:
        raise InputError("the zero vector has no leading term")
    key = max(v._terms)
    return tableau_of_index(TensorIndex.from_key(key, v.ambient)), v._terms[key]


@dataclass(frozen=True)
class TriangularRecord:
    tuple: VermaTuple
    leading_tableau: Tableau
    leading_coeff: int
    num_terms: int


def check_triangular(hw: HighestWeight, budget: int | None = None, vectors=None) -> list[TriangularRecord]:
    """Check that each Verma vector is ``c * u(T(a))`` plus strictly smaller terms.

    For every valid tuple: the largest tableau in the expansion is ``T(a)``,
    every coefficient is a nonnegative integer, and ``c = a1! a2! a3! a4!``.
    Raises :class:`VerificationError` on the first violation. ``vectors`` may
    supply precomputed ``(tuple, vector)`` pairs.
    """
    records = []
    if vectors is None:
        vectors = verma_vectors(hw, budget)
    for a, v in vectors:
        T = tuple_to_tableau(a, hw)
        if not v:
            raise VerificationError(f"f^{tuple(a)} v vanishes")
        lead, c = leading_term(v)
        if lead != T:
            raise VerificationError(f"leading tableau of f^{tuple(a)} v is {lead.rows}, expected {T.rows}")
        neg = [x for x in v._terms.values() if x < 0]
        if neg:
            raise VerificationError(f"f^{tuple(a)} v has {len(neg)} negative coefficients")
        expected = prod(factorial(x) for x in a)
        if c != expected:
            raise VerificationError(f"leading coefficient of f^{tuple(a)} v is {c}, expected {expected}")
        records.append(TriangularRecord(a, lead, c, len(v)))
    return records


def index_column(key: int, m1: int, m2: int) -> int:
    """0-based column of a packed pure tensor when the basis is sorted descending in tableau order."""
    return 4**m1 * 6**m2 - 1 - key


def verma_matrix(hw: HighestWeight, budget: int | None = None) -> list[dict[int, int]]:
    """Rows of Verma vectors (lexicographic tuples) over descending-ordered basis columns."""
    m1, m2 = hw.m1, hw.m2
    return [{index_column(k, m1, m2): c for k, c in v._terms.items()} for _, v in verma_vectors(hw, budget)]


def independence_rank(hw: HighestWeight, budget: int | None = None, vectors=None) -> int:
    """Exact rank of the matrix of all Verma vectors in the pure-tensor basis."""
    if vectors is None:
        vectors = verma_vectors(hw, budget)
    return integer_rank(v._terms for _, v in vectors)


def all_indices(hw: HighestWeight) -> Iterator[TensorIndex]:
    m1, m2 = hw.m1, hw.m2
    for codes in itertools.product(*([range(4)] * m1 + [range(6)] * m2)):
        yield TensorIndex.from_codes(codes, m1)


# alpha_j(h_i): rows i = h1, h2; columns j = alpha_1, alpha_2
CARTAN = {("h1", "1"): 2, ("h1", "2"): -2, ("h2", "1"): -1, ("h2", "2"): 2}


def relation_check(hw: HighestWeight, budget: int | None = None, vectors=None) -> bool:
    """Check the defining commutators on every pure tensor of W.

    ``[e_i, f_i] = h_i``, ``[e_1, f_2] = [e_2, f_1] = 0``,
    ``[h_i, f_j] = -alpha_j(h_i) f_j`` and ``[h_i, e_j] = alpha_j(h_i) e_j``.
    Passing ``vectors`` tests those vectors instead of the whole basis.
    """
    if vectors is None:
        check_budget(hw, budget)
        vectors = (basis_vector(ix) for ix in all_indices(hw))

    def bracket(x, y, v):
        return act(x, act(y, v)) - act(y, act(x, v))

    zero = ExactVector((hw.m1, hw.m2))
    for v in vectors:
        checks = [
            (bracket("e1", "f1", v), act("h1", v)),
            (bracket("e2", "f2", v), act("h2", v)),
            (bracket("e1", "f2", v), zero),
            (bracket("e2", "f1", v), zero),
            (bracket("h1", "h2", v), zero),
        ]
        for h in ("h1", "h2"):
            for j in ("1", "2"):
                a = CARTAN[(h, j)]
                checks.append((bracket(h, "f" + j, v), -a * act("f" + j, v)))
                checks.append((bracket(h, "e" + j, v), a * act("e" + j, v)))
        if any(lhs != rhs for lhs, rhs in checks):
            return False
    return True


def standard_coordinates(v: ExactVector) -> dict[tuple, int]:
    """Rewrite ``v`` over the unrelabeled basis eps_1..eps_4 (1-based indices).

    Keys are ``(word, wedges)`` with wedges as increasing index pairs. For the
    natural representation ``standard_coordinates(v)`` reads off the column vector.
    """
    out: dict[tuple, int] = {}
    for ix, c in v.items():
        sign = 1
        word = []
        for x in ix.word:
            r, s = RELABEL[x]
            word.append(r + 1)
            sign *= s
        wedges = []
        for j, k in ix.wedges:
            (rj, sj), (rk, sk) = RELABEL[j], RELABEL[k]
            sign *= sj * sk
            if rj > rk:
                rj, rk = rk, rj
                sign = -sign
            wedges.append((rj + 1, rk + 1))
        key = (tuple(word), tuple(wedges))
        out[key] = out.get(key, 0) + sign * c
    return {k: c for k, c in out.items() if c}


def natural_vector(v: ExactVector) -> list[int]:
    """Column vector in C^4 of an element of the natural representation."""
    if v.ambient != (1, 0):
        raise InputError("natural_vector needs ambient (1, 0)")
    col = [0, 0, 0, 0]
    for (word, _), c in standard_coordinates(v).items():
        col[word[0] - 1] += c
    return col


def weight_compatible(a, hw: HighestWeight, v: ExactVector) -> bool:
    """``h1`` and ``h2`` scale ``v`` by ``c1 - c2`` and ``c2`` for its predicted weight."""
    c1, c2 = verma_weight(a, hw)
    return act("h1", v) == (c1 - c2) * v and act("h2", v) == c2 * v
