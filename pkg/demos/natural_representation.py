"""
Verma vectors of the natural representation
===========================================

The smallest nontrivial case: highest weight omega_1, realized on C^4.
Four tuples, four vectors, each a signed standard basis vector.
"""

from sp4_verma import HighestWeight, enumerate_tuples, monomial_string, tuple_to_tableau, verma_vector
from sp4_verma.tensor import natural_vector

hw = HighestWeight(1, 0)

# each tuple gives a monomial in f1, f2 applied to e_1
for a in enumerate_tuples(hw):
    v = verma_vector(a, hw)
    T = tuple_to_tableau(a, hw)
    print(f"{monomial_string(a):<12} -> {natural_vector(v)}   tableau {T.rows[0]}")

# in the relabeled basis (e_2bar = e_4, e_1bar = -e_3) every entry above is +1;
# the -1 in the last line is only the sign of e_1bar = -e_3
