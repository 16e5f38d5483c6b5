"""Relative ideals: duals, biduals, the canonical ideal, and products."""

from typeseq import (
    bidual,
    canonical_ideal,
    colon,
    dedekind_different,
    dual,
    from_generators,
    ideal_from_generators,
    ideal_product,
    is_reflexive,
    length_between,
    maximal_ideal,
    unit_ideal,
)

S = from_generators((3, 4, 5))
E = ideal_from_generators(S, (4, 5))
print(f"E = (4,5) over {S.encode()}: {E.encode()}")
print(f"  min {E.min_element}, ideal conductor {E.conductor}")

# the dual S - E and the bidual
Ed = dual(E)
Eb = bidual(E)
print(f"  dual {Ed.encode()},  bidual {Eb.encode()}")
print(f"  E reflexive? {is_reflexive(E)}  (bidual adds {length_between(Eb, E)} element)")
assert not is_reflexive(E) and length_between(Eb, E) == 1

# the canonical ideal K = {x : c-1-x not in S} and the different K* = S - K
K = canonical_ideal(S)
theta = dedekind_different(S)
print(f"\nK = {K.encode()},  different = {theta.encode()}")
assert colon(unit_ideal(S), K) == theta

# colon by the maximal ideal measures the type
M = maximal_ideal(S)
print(f"l((S - M)/S) = {length_between(colon(unit_ideal(S), M), unit_ideal(S))} = type")
assert length_between(colon(unit_ideal(S), M), unit_ideal(S)) == S.type

# products are sumsets; the unit ideal is the identity
print(f"\nM + M = {ideal_product(M, M).encode()}")
assert ideal_product(unit_ideal(S), E) == E
