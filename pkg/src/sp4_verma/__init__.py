"""Verma bases of finite dimensional irreducible sp4-modules, checked in exact arithmetic."""
from .core import (
    BudgetExceeded,
    ConsistencyError,
    HighestWeight,
    InputError,
    VerificationError,
    VermaTuple,
    WeightVec,
    entry_compare,
    format_entry,
    parse_entry,
    partition_of,
)
from .tableaux import (
    Tableau,
    check_adjacent_columns,
    check_one_bar_pairs,
    enumerate_kn4,
    is_kn,
    is_kn_sp4,
    is_semistandard,
    pair_order,
    tableau_order,
    tableau_weight,
)
from .tensor import (
    ExactVector,
    TensorIndex,
    act,
    act_on_letter,
    check_triangular,
    highest_weight_vector,
    independence_rank,
    leading_term,
    relation_check,
    tableau_of_index,
    u_of_tableau,
    verma_vector,
    verma_vectors,
)
from .verma import (
    enumerate_tuples,
    is_valid_tuple,
    monomial_string,
    tableau_to_tuple,
    tuple_to_tableau,
    verma_weight,
)
from .weyl import weyl_dim

__version__ = "0.1.0"
