"""
A full basis for highest weight omega_1 + 2 omega_2
===================================================

Forty tuples, forty KN tableaux, forty weights. The bijection is
computed row by row from the exponents, then inverted again.
"""

from collections import Counter

from sp4_verma import HighestWeight, enumerate_tuples, monomial_string, tableau_to_tuple, tuple_to_tableau, verma_weight
from sp4_verma.io import tableau_ascii
from sp4_verma.verma import bijection_case
from sp4_verma.weyl import weyl_dim

hw = HighestWeight(1, 2)
tuples = enumerate_tuples(hw)
print(len(tuples), "tuples; Weyl dimension", weyl_dim(*hw.partition))

for a in tuples[:6] + tuples[-3:]:
    T = tuple_to_tableau(a, hw)
    assert tableau_to_tuple(T) == a
    print(f"\n{tuple(a)}  {monomial_string(a)}  weight {tuple(verma_weight(a, hw))}  [{bijection_case(a, hw)}]")
    print(tableau_ascii(T))

# weight multiplicities; the module is self-dual so the table is symmetric under c -> -c
mult = Counter(verma_weight(a, hw) for a in tuples)
print()
for c in sorted(mult, reverse=True):
    print(tuple(c), mult[c])
