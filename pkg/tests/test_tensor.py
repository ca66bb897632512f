import itertools
from math import factorial

import numpy as np
import pytest
import sympy

from sp4_verma.core import BudgetExceeded, HighestWeight, InputError, VerificationError
from sp4_verma.tableaux import Tableau, all_fillings, highest_weight_tableau, is_column_strict, tableau_order
from sp4_verma.tensor import (
    ExactVector,
    GENERATORS,
    TensorIndex,
    act,
    act_on_letter,
    act_power,
    all_indices,
    basis_vector,
    check_budget,
    check_triangular,
    highest_weight_vector,
    independence_rank,
    index_weight,
    leading_term,
    natural_vector,
    relation_check,
    tableau_of_index,
    u_of_tableau,
    verma_matrix,
    verma_vector,
    verma_vectors,
    weight_compatible,
)
from sp4_verma.verma import enumerate_tuples, tuple_to_tableau, verma_weight


def tab(*rows):
    return Tableau(tuple(rows), 2)


def E(i, j):
    m = np.zeros((4, 4), dtype=int)
    m[i - 1, j - 1] = 1
    return m


# generators written out again from the E_ij formulas at n = 2, kept apart from the package
ORACLE = {
    "e1": E(1, 2) - E(4, 3),
    "f1": E(2, 1) - E(3, 4),
    "h1": E(1, 1) - E(2, 2) - E(3, 3) + E(4, 4),
    "e2": E(2, 4),
    "f2": E(4, 2),
    "h2": E(2, 2) - E(4, 4),
}
# relabeled basis as columns: eps_1, eps_2, eps_2bar = eps_4, eps_1bar = -eps_3
BASIS = {1: np.array([1, 0, 0, 0]), 2: np.array([0, 1, 0, 0]), -2: np.array([0, 0, 0, 1]), -1: np.array([0, 0, -1, 0])}


class TestLetterAction:
    @pytest.mark.parametrize("g", GENERATORS)
    def test_matches_matrix_oracle(self, g):
        for x in (1, 2, -2, -1):
            image = ORACLE[g] @ BASIS[x]
            rebuilt = sum((c * BASIS[y] for y, c in act_on_letter(g, x)), np.zeros(4, dtype=int))
            assert np.array_equal(image, rebuilt), (g, x)

    def test_listed_values(self):
        assert act_on_letter("f1", 1) == [(2, 1)]
        assert act_on_letter("f1", -2) == [(-1, 1)]
        assert act_on_letter("f2", 1) == []
        assert act_on_letter("f2", 2) == [(-2, 1)]
        assert act_on_letter("e1", -1) == [(-2, 1)]
        assert act_on_letter("h1", -1) == [(-1, -1)]

    def test_lowering_is_sign_free(self):
        for g in ("f1", "f2", "e1", "e2"):
            for x in (1, 2, -2, -1):
                assert all(c == 1 for _, c in act_on_letter(g, x))

    def test_bad_input(self):
        with pytest.raises(InputError):
            act_on_letter("f3", 1)
        with pytest.raises(InputError):
            act_on_letter("f1", 3)


class TestAct:
    def test_f2_on_highest_weight_two_wedges(self):
        v = act("f2", highest_weight_vector(HighestWeight(0, 2)))
        expected = ExactVector.from_terms(
            (0, 2), {TensorIndex((), ((1, -2), (1, 2))): 1, TensorIndex((), ((1, 2), (1, -2))): 1}
        )
        assert v == expected

    @pytest.mark.parametrize("m1,m2", [(0, 0), (1, 0), (0, 1), (2, 3), (3, 1)])
    def test_highest_weight_vector(self, m1, m2):
        hw = HighestWeight(m1, m2)
        v = highest_weight_vector(hw)
        assert act("h1", v) == m1 * v
        assert act("h2", v) == m2 * v
        assert not act("e1", v) and not act("e2", v)

    def test_highest_weight_vector_indices(self):
        assert list(highest_weight_vector(HighestWeight(1, 0)).items()) == [(TensorIndex((1,), ()), 1)]
        assert list(highest_weight_vector(HighestWeight(0, 1)).items()) == [(TensorIndex((), ((1, 2),)), 1)]
        assert list(highest_weight_vector(HighestWeight(1, 2)).items()) == [
            (TensorIndex((1,), ((1, 2), (1, 2))), 1)
        ]

    def test_wedge_sign_canonicalization(self):
        canonical = TensorIndex((2,), ((1, -2), (2, -1)))
        swapped = TensorIndex((2,), ((-2, 1), (2, -1)))
        v = ExactVector.from_terms((1, 2), {canonical: 1})
        w = ExactVector.from_terms((1, 2), {swapped: 1})
        assert w == -v
        for g in GENERATORS:
            assert act(g, w) == -act(g, v)
        assert not ExactVector.from_terms((1, 2), {TensorIndex((2,), ((2, 2), (1, 2))): 5})

    def test_derivation_against_raw_expansion(self):
        # expand by hand without canonical tables: sum over slots, then canonicalize
        for ix in all_indices(HighestWeight(1, 2)):
            for g in GENERATORS:
                raw = {}
                for pos, x in enumerate(ix.word):
                    for y, c in act_on_letter(g, x):
                        new = TensorIndex(ix.word[:pos] + (y,) + ix.word[pos + 1:], ix.wedges)
                        raw[new] = raw.get(new, 0) + c
                for s, (j, k) in enumerate(ix.wedges):
                    for side in (0, 1):
                        for y, c in act_on_letter(g, (j, k)[side]):
                            pair = (y, k) if side == 0 else (j, y)
                            new = TensorIndex(ix.word, ix.wedges[:s] + (pair,) + ix.wedges[s + 1:])
                            raw[new] = raw.get(new, 0) + c
                assert act(g, basis_vector(ix)) == ExactVector.from_terms((1, 2), raw)

    def test_nilpotent(self):
        hw = HighestWeight(2, 3)
        v = highest_weight_vector(hw)
        assert act_power("f2", v, hw.m2) and not act_power("f2", v, hw.m2 + 1)
        assert act_power("f1", v, hw.m1) and not act_power("f1", v, hw.m1 + 1)

    def test_ambient_mismatch(self):
        with pytest.raises(InputError):
            highest_weight_vector(HighestWeight(1, 0)) + highest_weight_vector(HighestWeight(0, 1))


class TestTableauCorrespondence:
    def test_examples(self):
        assert u_of_tableau(tab((1, 2, 2), (2, -2))) == TensorIndex((2,), ((2, -2), (1, 2)))
        assert u_of_tableau(tab((1, 1, 2), (2, -1))) == TensorIndex((2,), ((1, -1), (1, 2)))
        hw = HighestWeight(2, 3)
        assert u_of_tableau(highest_weight_tableau(hw)) == TensorIndex((1, 1), ((1, 2),) * 3)

    def test_rejects_non_column_strict(self):
        with pytest.raises(InputError):
            u_of_tableau(tab((1, 2), (1,)))

    @pytest.mark.parametrize("m1,m2", [(0, 0), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2)])
    def test_bijective_onto_basis(self, m1, m2):
        hw = HighestWeight(m1, m2)
        indices = list(all_indices(hw))
        tabs = [tableau_of_index(ix) for ix in indices]
        assert all(is_column_strict(T) for T in tabs)
        assert [u_of_tableau(T) for T in tabs] == indices
        shape = tuple(x for x in hw.partition if x)
        cst = {T for T in all_fillings(shape, 2) if is_column_strict(T)}
        assert set(tabs) == cst

    @pytest.mark.parametrize("m1,m2", [(3, 0), (0, 2), (1, 1), (2, 1), (1, 2)])
    def test_packed_key_is_tableau_order(self, m1, m2):
        indices = list(all_indices(HighestWeight(m1, m2)))
        for a, b in itertools.product(indices, repeat=2):
            c = tableau_order(tableau_of_index(a), tableau_of_index(b))
            assert c == (a.key() > b.key()) - (a.key() < b.key())


class TestVermaVector:
    def test_zero_tuple(self):
        hw = HighestWeight(2, 1)
        assert verma_vector((0, 0, 0, 0), hw) == highest_weight_vector(hw)

    def test_natural_representation(self):
        v = verma_vector((0, 1, 1, 1), HighestWeight(1, 0))
        assert list(v.items()) == [(TensorIndex((-1,), ()), 1)]
        assert natural_vector(v) == [0, 0, -1, 0]

    def test_f2_expansion(self):
        v = verma_vector((1, 0, 0, 0), HighestWeight(0, 2))
        assert sorted(c for _, c in v.items()) == [1, 1]

    def test_invalid_tuple(self):
        with pytest.raises(InputError):
            verma_vector((0, 2, 2, 0), HighestWeight(1, 0))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            verma_vector((0, 0, 0, 0), HighestWeight(6, 6))
        with pytest.raises(BudgetExceeded):
            check_budget(HighestWeight(2, 2), budget=100)
        check_budget(HighestWeight(2, 2), budget=576)

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv("SYMP_VERMA_BUDGET", "10")
        with pytest.raises(BudgetExceeded):
            verma_vector((0, 0, 0, 0), HighestWeight(1, 1))

    @pytest.mark.parametrize("m1,m2", [(1, 1), (2, 1), (1, 2)])
    def test_shared_prefixes_match_direct(self, m1, m2):
        hw = HighestWeight(m1, m2)
        for a, v in verma_vectors(hw):
            assert v == verma_vector(a, hw)

    @pytest.mark.parametrize("m1,m2", [(1, 1), (2, 2), (3, 1)])
    def test_support_weight(self, m1, m2):
        hw = HighestWeight(m1, m2)
        for a, v in verma_vectors(hw):
            assert {index_weight(ix) for ix, _ in v.items()} == {verma_weight(a, hw)}
            assert weight_compatible(a, hw, v)


class TestLeadingTerm:
    def test_highest_weight(self):
        hw = HighestWeight(2, 1)
        assert leading_term(highest_weight_vector(hw)) == (highest_weight_tableau(hw), 1)

    def test_example(self):
        hw = HighestWeight(1, 2)
        T, c = leading_term(verma_vector((2, 3, 1, 0), hw))
        assert T == tab((1, 2, -2), (-2, -1)) == tuple_to_tableau((2, 3, 1, 0), hw)
        assert c == factorial(2) * factorial(3)

    @pytest.mark.parametrize("m2", range(1, 5))
    def test_pure_f2_power(self, m2):
        hw = HighestWeight(0, m2)
        for a1 in range(m2 + 1):
            _, c = leading_term(verma_vector((a1, 0, 0, 0), hw))
            assert c == factorial(a1)

    def test_zero(self):
        with pytest.raises(InputError):
            leading_term(ExactVector((1, 0)))

    @pytest.mark.parametrize("m1,m2", [(1, 1), (1, 2)])
    def test_leading_coefficient_brute_force(self, m1, m2):
        # maximum of the support taken through tableaux, not packed keys
        hw = HighestWeight(m1, m2)
        for a, v in verma_vectors(hw):
            items = list(v.items())
            best = items[0]
            for ix, c in items[1:]:
                if tableau_order(tableau_of_index(ix), tableau_of_index(best[0])) > 0:
                    best = (ix, c)
            assert tableau_of_index(best[0]) == tuple_to_tableau(a, hw)
            assert best[1] == factorial(a[0]) * factorial(a[1]) * factorial(a[2]) * factorial(a[3])
            assert all(c > 0 for _, c in items)


class TestTriangular:
    def test_natural(self):
        recs = check_triangular(HighestWeight(1, 0))
        assert len(recs) == 4 and all(r.leading_coeff == 1 and r.num_terms == 1 for r in recs)

    def test_small(self):
        assert len(check_triangular(HighestWeight(0, 1))) == 5
        assert len(check_triangular(HighestWeight(1, 2))) == 40

    def test_detects_violation(self):
        hw = HighestWeight(1, 0)
        pairs = list(verma_vectors(hw))
        a, v = pairs[1]
        broken = v + basis_vector(TensorIndex((-1,), ()))
        with pytest.raises(VerificationError):
            check_triangular(hw, vectors=[(a, broken)])
        with pytest.raises(VerificationError):
            check_triangular(hw, vectors=[(a, 3 * v)])
        with pytest.raises(VerificationError):
            check_triangular(hw, vectors=[(a, v - basis_vector(TensorIndex((1,), ())))])


class TestRank:
    @pytest.mark.parametrize("m1,m2,r", [(1, 0, 4), (0, 0, 1), (1, 2, 40), (0, 1, 5)])
    def test_examples(self, m1, m2, r):
        assert independence_rank(HighestWeight(m1, m2)) == r

    @pytest.mark.parametrize("m1,m2", [(1, 1), (0, 2), (2, 1)])
    def test_against_sympy(self, m1, m2):
        hw = HighestWeight(m1, m2)
        rows = verma_matrix(hw)
        cols = sorted({c for r in rows for c in r})
        M = sympy.Matrix([[r.get(c, 0) for c in cols] for r in rows])
        assert M.rank() == independence_rank(hw) == len(enumerate_tuples(hw))


class TestRelations:
    @pytest.mark.parametrize("m1,m2", [(1, 0), (0, 1), (1, 1), (0, 0)])
    def test_hold(self, m1, m2):
        assert relation_check(HighestWeight(m1, m2))

    def test_matrix_oracle(self):
        def br(x, y):
            return ORACLE[x] @ ORACLE[y] - ORACLE[y] @ ORACLE[x]

        assert np.array_equal(br("e1", "f1"), ORACLE["h1"])
        assert np.array_equal(br("e2", "f2"), ORACLE["h2"])
        assert not br("e1", "f2").any() and not br("e2", "f1").any()
        assert np.array_equal(br("h1", "f2"), 2 * ORACLE["f2"])
        assert np.array_equal(br("h2", "f1"), ORACLE["f1"])

    def test_detects_broken_action(self, monkeypatch):
        from sp4_verma import tensor

        word, wedge = tensor.SLOT_TABLES["f1"]
        broken = (word[:1] + (((1, 2),),) + word[2:], wedge)
        monkeypatch.setitem(tensor.SLOT_TABLES, "f1", broken)
        monkeypatch.setattr(tensor, "_TABLE_CACHE", {})
        assert not relation_check(HighestWeight(1, 0))
