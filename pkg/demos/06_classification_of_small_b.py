"""Classifying rings whose tail invariant b stays at or below the type."""

from typeseq import (
    NumericalSemigroup,
    b_of_tail,
    case_j_semigroups,
    classification_census,
    classify_b,
    window_profile,
)

# b(tail) against the type r splits all rings into a handful of families
for enc in (
    "0,3|3",              # b < r-1: multiples of e, then the tail
    "0,10,12|12",         # b = r-1, first pattern
    "0,4,5,8|8",          # b = r-1, second pattern
    "0,6,10,12|16",       # b = r, family (double step)
    "0,5,6,7,10|10",      # b = r, sporadic list
    "0,4,6,8|10",         # b > r: outside the classification
):
    S = NumericalSemigroup.decode(enc)
    out = classify_b(S)
    print(f"{enc:24s} b={b_of_tail(S):2d} r={S.type}  ->  {out.tag}")
    assert all(c.passed for c in out.checks)

# the sporadic list is complete: exactly three semigroups, all of
# multiplicity 5
print("\nsporadic b = r list:", [T.encode() for T in case_j_semigroups()])
assert len(case_j_semigroups()) == 3

# the window profile behind the classification, for one ring
p = window_profile(NumericalSemigroup.decode("0,4,8,9,12,13|16"))
print(f"\nprofile of 0,4,8,9,12,13|16: b={p.b} quotient={p.quotient_length}"
      f" late indices {p.late_indices}")
assert all(c.passed for c in p.checks)

# sweeping every semigroup with conductor <= 30 confirms the families
rep = classification_census(max_conductor=30)
print(f"\nconductor <= 30: {rep.semigroup_count} semigroups, tags:")
for tag, n in sorted(rep.classification_tallies.items()):
    print(f"  {tag:22s} {n}")
assert rep.passed
