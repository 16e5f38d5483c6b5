"""The invariants a, b, d of an ideal, and the case where a goes negative."""

from typeseq import (
    NumericalSemigroup,
    RelativeIdeal,
    ab_invariants,
    d_invariant,
    decomposition_check,
    from_generators,
    ideal_from_generators,
    length_between,
    unit_ideal,
)

# a(I) = l(I*/S) - l(S/I) can be negative: the smallest known witness
S = from_generators((9, 15, 17, 23, 25, 29, 31))
I = ideal_from_generators(S, (38, 44, 50))
a, b = ab_invariants(S, I)
print(f"S = <9,15,17,23,25,29,31>, I = (38,44,50)")
print(f"  a = {a}, b = {b}, d = {d_invariant(S, I)}")
assert (a, b) == (-1, 69)

# a + b = (r - 1) * l(S/I) always
l_quot = length_between(unit_ideal(S), I)
print(f"  a + b = {a + b} = (type-1) * l(S/I) = {(S.type - 1) * l_quot}")
assert a + b == (S.type - 1) * l_quot

# every identity and bound is re-checked on demand
rep = decomposition_check(S, I)
print(f"  {len(rep.checks)} checks, all pass: {rep.passed}")
assert rep.passed

# d is not invariant under translation, unlike a
G = NumericalSemigroup.decode("0,4,8,9,12,13|16")
R2 = RelativeIdeal(G, 8, 16, 0b110011)
T = RelativeIdeal(G, 12, 20, 0b110011)  # R2 shifted by 4
print(f"\nover {G.encode()}:")
print(f"  d({R2.encode()}) = {d_invariant(G, R2)}")
print(f"  d({T.encode()}) = {d_invariant(G, T)}  (same set, shifted)")
assert d_invariant(G, R2) == 0 and d_invariant(G, T) == 1
