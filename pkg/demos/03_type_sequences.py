"""Type sequences: the per-step lengths of the chain of tail duals."""

from typeseq import (
    NumericalSemigroup,
    extended_type_sequence,
    from_generators,
    type_sequence,
)

for gens in ((2, 3), (3, 4, 5), (4, 5, 7), (5, 6, 9), (6, 7, 8, 9, 10, 11)):
    S = from_generators(gens)
    ts = type_sequence(S)
    print(f"<{','.join(map(str, gens))}>  ts = {ts.values}")
    assert sum(ts.values) == S.genus
    assert not ts.values or ts.values[0] == S.type

# Gorenstein rings are exactly the all-ones sequences
assert type_sequence(from_generators((5, 6, 9))).values == (1,) * 7

# the sequence need not be monotone
G = NumericalSemigroup.decode("0,4,8,9,12,13|16")
print(f"\n{G.encode()}  ts = {type_sequence(G).values}")
assert type_sequence(G).values == (2, 2, 1, 2, 1, 2)

# beyond the small elements every entry is 1
S = from_generators((3, 4, 5))
print(f"\nextended over <3,4,5>: {extended_type_sequence(S, 6)}")
assert extended_type_sequence(S, 6) == (2, 1, 1, 1, 1, 1)
