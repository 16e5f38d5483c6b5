"""Brute-force reference implementations used to validate the package.

Everything here works on plain Python sets over an explicit margin, with
no bit tricks and no shared code with the package, so agreement is
evidence of correctness rather than of consistency.
"""

from __future__ import annotations

import itertools
from math import gcd


def sieve_members(generators, bound: int) -> set[int]:
    """All sums of the generators below ``bound``, by saturation."""
    members = {0}
    changed = True
    while changed:
        changed = False
        for m in list(members):
            for g in generators:
                x = m + g
                if x < bound and x not in members:
                    members.add(x)
                    changed = True
    return members


def conductor_of(members: set[int], bound: int) -> int:
    """Smallest c with [c, bound) fully inside; caller picks a safe bound."""
    c = bound
    while c > 0 and (c - 1) in members:
        c -= 1
    return c


def semigroup_facts(generators, pad: int = 4):
    """(members set, conductor, genus, multiplicity) with a safe margin."""
    g = 0
    for x in generators:
        g = gcd(g, x)
    assert g == 1, "oracle needs coprime generators"
    top = max(generators)
    bound = 2 * top * top + pad
    members = sieve_members(generators, bound)
    c = conductor_of(members, bound)
    genus = sum(1 for x in range(c) if x not in members)
    mult = min(x for x in members if x > 0) if c > 0 else 1
    return members, c, genus, mult


def pseudo_frobenius(members: set[int], conductor: int) -> list[int]:
    """Gaps x with x + s a member for every nonzero member s."""
    if conductor == 0:
        return [-1]
    nonzero = [s for s in sorted(members) if 0 < s < 2 * conductor + 2]
    out = []
    for x in range(-1, conductor):
        if x in members and x >= 0:
            continue
        if all(x + s in members or x + s >= conductor for s in nonzero):
            out.append(x)
    return [x for x in out if x >= 1] or []


def minimal_generators(members: set[int], conductor: int, mult: int) -> list[int]:
    """Members that are not sums of two smaller nonzero members."""
    if conductor == 0:
        return [1]
    out = []
    for x in sorted(m for m in members if 0 < m < conductor + mult):
        decomposable = any(
            y in members and x - y in members
            for y in range(1, x)
        )
        if not decomposable:
            out.append(x)
    return out


def gap_set_semigroups(genus: int) -> set[frozenset[int]]:
    """All gap sets of the given genus, by direct subset search.

    Every gap is below 2 * genus, and a set of positive integers is a
    gap set exactly when each gap z splits only into pairs that keep one
    part a gap: for 0 < x < z with x not a gap, z - x must be a gap.
    """
    if genus == 0:
        return {frozenset()}
    out = set()
    universe = range(1, 2 * genus)
    for combo in itertools.combinations(universe, genus):
        gaps = frozenset(combo)
        ok = all(
            (x in gaps) or (z - x in gaps)
            for z in gaps
            for x in range(1, z)
        )
        if ok:
            out.add(gaps)
    return out


def encode_gap_set(gaps: frozenset[int]) -> str:
    """Canonical small-elements encoding of the semigroup with these gaps."""
    c = (max(gaps) + 1) if gaps else 0
    small = [x for x in range(c) if x not in gaps] + [c]
    if c == 0:
        small = [0]
    return ",".join(str(x) for x in small) + f"|{c}"


# -- relative ideals as explicit sets ---------------------------------------------


def ideal_set(ideal, margin: int = 0) -> set[int]:
    """Members of a RelativeIdeal in [min, conductor + margin]."""
    return {
        x
        for x in range(ideal.min_element, ideal.conductor + margin + 1)
        if x in ideal
    }


def semigroup_set(S, margin: int = 0) -> set[int]:
    return {x for x in range(0, S.conductor + margin + 1) if x in S}


def colon_set(A: set[int], B: set[int], lo: int, hi: int, top: int) -> set[int]:
    """{z in [lo, hi) : z + B subset of A}, sets read below ``top``."""
    out = set()
    for z in range(lo, hi):
        if all(z + b in A for b in B if z + b < top):
            out.add(z)
    return out


def sum_set(A: set[int], B: set[int], top: int) -> set[int]:
    return {a + b for a in A for b in B if a + b < top}


def canonical_set(members: set[int], conductor: int, top: int) -> set[int]:
    """{x : conductor - 1 - x not a member}, read on [0, top)."""
    return {
        x
        for x in range(0, top)
        if (conductor - 1 - x) not in members or conductor - 1 - x < 0
    }


def type_sequence_sets(members: set[int], conductor: int) -> list[int]:
    """r_i via colon lengths of the tail chain, on explicit sets."""
    if conductor == 0:
        return []
    top = 4 * conductor + 8
    full = members | set(range(conductor, top))
    small = [s for s in sorted(full) if s <= conductor]
    lo = -2 * conductor - 4

    def dual_of_tail_chain(i: int) -> set[int]:
        r_i = {s for s in full if s >= small[i]}
        return colon_set(full, r_i, lo, conductor + 2, top)

    out = []
    prev = dual_of_tail_chain(0)
    for i in range(1, len(small)):
        cur = dual_of_tail_chain(i)
        out.append(len(cur - prev))
        prev = cur
    return out


def proper_ideals_brute(S, window: int) -> set[tuple[int, int, tuple[int, ...]]]:
    """(min, conductor, members-below-conductor) triples by subset search."""
    c = S.conductor
    lo = max(c, 1)
    hi = c + window
    bound = hi + 2 * lo + 8
    members = [x for x in range(1, hi) if x in S]
    svals = [s for s in range(1, bound) if s in S]
    out = set()
    for r in range(len(members) + 1):
        for combo in itertools.combinations(members, r):
            for ce in range(lo, hi + 1):
                below = set(x for x in combo if x < ce)
                full = below | set(range(ce, bound))
                ok = all(x + s in full for x in full for s in svals if x + s < bound)
                if not ok:
                    continue
                if ce - 1 in full:
                    continue
                out.add((min(full), ce, tuple(sorted(below))))
    return out
