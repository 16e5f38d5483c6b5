"""Constructing numerical semigroups and reading their basic invariants."""

from typeseq import NumericalSemigroup, from_generators, oversemigroups

S = from_generators((3, 4, 5))
print(f"S = <3,4,5>  encoded {S.encode()}")
print(f"  multiplicity {S.multiplicity}, conductor {S.conductor}")
print(f"  genus {S.genus}, type {S.type}")
print(f"  gaps {S.gaps}, pseudo-Frobenius {S.pseudo_frobenius}")
assert S.conductor == 3 and S.genus == 2 and S.type == 2

# generators are reduced to the minimal set
T = from_generators((4, 5, 7, 9, 13))
print(f"\n<4,5,7,9,13> minimizes to {T.minimal_generators}")
assert T.minimal_generators == (4, 5, 7)

# membership is O(1): below the conductor via the table, above it always
print(f"\n7 in <4,5,7>: {7 in T},  6 in <4,5,7>: {6 in T},  100 in: {100 in T}")

# the encoding round-trips through a plain string
U = NumericalSemigroup.decode(T.encode())
assert U == T
print(f"codec round-trip: {T.encode()}")

# every semigroup sits under a finite chain of oversemigroups ending at N
print("\noversemigroups of <3,4,5>:")
for V in oversemigroups(S):
    print(f"  {V.encode()}  genus {V.genus}")
