"""Numerical semigroups stored as bit-per-integer membership tables.

A numerical semigroup S is a subset of the non-negative integers that
contains 0, is closed under addition, and has a finite complement (the
gaps).  The least member c with c + N inside S is the conductor.  The
normal form used everywhere in this package is the pair
``(conductor, mask)`` where bit x of ``mask`` records membership of x for
x in [0, conductor); every integer >= conductor is a member by definition
of the conductor, so no bits are stored for the tail.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

from .errors import (
    ConductorNotTight,
    EmptyGenerators,
    EncodingError,
    NotClosed,
    NotCoprime,
)


def _ones(width: int) -> int:
    """Bitmask with ``width`` low bits set."""
    return (1 << width) - 1 if width > 0 else 0


class NumericalSemigroup:
    """Immutable numerical semigroup in ``(conductor, mask)`` normal form.

    ``small_elements`` lists the members s_0 = 0 < s_1 < ... < s_n where
    s_n equals the conductor; for S = N it is just (0,).  Instances are
    hashable and compare by value, so they can key caches.
    """

    __slots__ = ("conductor", "mask", "small_elements", "_mingens", "_pf")

    def __init__(self, conductor: int, mask: int):
        if conductor < 0:
            raise ValueError("conductor must be non-negative")
        if conductor > 0:
            # 0 is always a member and conductor - 1 is always a gap.
            if not mask & 1:
                raise ValueError("0 must be a member")
            if (mask >> (conductor - 1)) & 1:
                raise ConductorNotTight(f"{conductor - 1} is a member")
        elif mask:
            raise ValueError("mask must be empty when the conductor is 0")
        self.conductor = conductor
        self.mask = mask
        small = []
        bits = mask
        while bits:
            low = bits & -bits
            small.append(low.bit_length() - 1)
            bits ^= low
        small.append(conductor)
        if conductor == 0:
            small = [0]
        self.small_elements = tuple(small)
        self._mingens: tuple[int, ...] | None = None
        self._pf: tuple[int, ...] | None = None

    # -- membership and views ------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x >= self.conductor:
            return True
        if x < 0:
            return False
        return bool((self.mask >> x) & 1)

    def bits_below(self, stop: int) -> int:
        """Membership bits for [0, stop), with the tail filled in."""
        if stop <= 0:
            return 0
        if stop <= self.conductor:
            return self.mask & _ones(stop)
        return self.mask | (_ones(stop - self.conductor) << self.conductor)

    @property
    def multiplicity(self) -> int:
        """Least nonzero member; 1 for S = N."""
        if self.conductor == 0:
            return 1
        return self.small_elements[1]

    @property
    def n(self) -> int:
        """Number of nonzero small elements: n = c - genus."""
        return len(self.small_elements) - 1

    @property
    def genus(self) -> int:
        return self.conductor - self.n

    @property
    def frobenius(self) -> int:
        """Largest non-member (-1 for S = N)."""
        return self.conductor - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(
            x for x in range(self.conductor) if not (self.mask >> x) & 1
        )

    @property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Non-members x with x + s a member for every nonzero member s.

        For S = N the same colon-style definition gives {-1}, matching the
        convention that the valuation ring has type 1.
        """
        if self._pf is None:
            if self.conductor == 0:
                self._pf = (-1,)
            else:
                # x + s for s >= conductor is automatically a member, so it
                # suffices to test the nonzero members below the conductor.
                small_nonzero = self.small_elements[1:-1]
                self._pf = tuple(
                    x
                    for x in self.gaps
                    if all(x + s in self for s in small_nonzero)
                )
        return self._pf

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """Nonzero members not expressible as a sum of two nonzero members.

        Every member >= conductor + multiplicity splits off a copy of the
        multiplicity, so candidates live in [1, conductor + multiplicity).
        """
        if self._mingens is None:
            if self.conductor == 0:
                self._mingens = (1,)
            else:
                e = self.multiplicity
                gens = []
                for x in range(e, self.conductor + e):
                    if x not in self:
                        continue
                    if any(
                        a in self and (x - a) in self
                        for a in range(e, x - e + 1)
                    ):
                        continue
                    gens.append(x)
                self._mingens = tuple(gens)
        return self._mingens

    @property
    def is_gorenstein(self) -> bool:
        """Symmetric case: twice the genus equals the conductor."""
        return 2 * self.genus == self.conductor

    def small_element(self, j: int) -> int:
        """j-th small element, extended by s_j = c + (j - n) for j > n."""
        if j <= self.n:
            return self.small_elements[j]
        return self.conductor + (j - self.n)

    def small_index(self, x: int) -> int:
        """Index j with extended small element s_j = x (x must be a member)."""
        if x > self.conductor:
            return self.n + (x - self.conductor)
        j = bisect_left(self.small_elements, x)
        if self.small_elements[j] != x:
            raise ValueError(f"{x} is not a member")
        return j

    # -- encoding ------------------------------------------------------------

    def encode(self) -> str:
        """Canonical text form: small elements comma-joined, then conductor."""
        return ",".join(str(s) for s in self.small_elements) + "|" + str(
            self.conductor
        )

    @classmethod
    def decode(cls, text: str) -> "NumericalSemigroup":
        parts = text.split("|")
        if len(parts) != 2:
            raise EncodingError(f"bad semigroup encoding: {text!r}")
        try:
            conductor = int(parts[1])
            elements = [int(t) for t in parts[0].split(",") if t != ""]
        except ValueError as exc:
            raise EncodingError(f"bad semigroup encoding: {text!r}") from exc
        return from_small_elements(elements, conductor)

    # -- value identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.conductor, self.mask))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self.encode()!r})"

    def __reduce__(self):
        return (NumericalSemigroup, (self.conductor, self.mask))


def from_generators(generators) -> NumericalSemigroup:
    """Semigroup generated by a coprime set of positive integers.

    The sieve grows a membership table by repeated shifted-or until it finds
    ``min(generators)`` consecutive members starting at some t; from there on
    every integer is a member by induction (subtract the smallest generator),
    so the conductor is one past the largest gap below t.
    """
    gens = sorted({int(g) for g in generators})
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise ValueError("generators must be positive")
    if math.gcd(*gens) != 1:
        raise NotCoprime(f"gcd({', '.join(map(str, gens))}) != 1")
    lo = gens[0]
    bound = max(2 * gens[-1] * gens[-1], lo + gens[-1] + 1, 4)
    while True:
        full = _ones(bound)
        mask = 1
        while True:
            grown = mask
            for g in gens:
                grown |= mask << g
            grown &= full
            if grown == mask:
                break
            mask = grown
        gap_bits = ~mask & full
        t = gap_bits.bit_length()  # one past the largest gap found
        if t + lo <= bound:
            # [t, t + lo) are members, certifying the conductor t.
            return NumericalSemigroup(t, mask & _ones(t))
        bound *= 2


def from_small_elements(elements, conductor: int) -> NumericalSemigroup:
    """Semigroup from its members below ``conductor`` plus the tail.

    Members >= conductor may appear in ``elements``; they are redundant and
    are folded into the tail, which lets encodings that list the conductor
    itself round-trip.
    """
    if conductor < 0:
        raise ValueError("conductor must be non-negative")
    elems = sorted({int(x) for x in elements})
    if not elems or elems[0] != 0:
        if elems and elems[0] < 0:
            raise ValueError("members must be non-negative")
        raise ValueError("0 must be listed among the elements")
    mask = 0
    for x in elems:
        if x < conductor:
            mask |= 1 << x
    if conductor > 0 and (mask >> (conductor - 1)) & 1:
        raise ConductorNotTight(
            f"{conductor - 1} is listed, so the conductor is not tight"
        )
    window = _ones(conductor)
    bits = mask & ~1
    while bits:
        low = bits & -bits
        a = low.bit_length() - 1
        bits ^= low
        # a + member must land in the set or the tail.
        missing = ((mask << a) & window) & ~mask
        if missing:
            b = missing.bit_length() - 1 - a
            raise NotClosed(f"{a} + {b} = {a + b} is missing")
    return NumericalSemigroup(conductor, mask)


@dataclass(frozen=True)
class SemigroupInvariants:
    """Numeric profile of a semigroup."""

    multiplicity: int
    conductor: int
    frobenius: int
    genus: int
    n: int
    small_elements: tuple[int, ...]
    gaps: tuple[int, ...]
    minimal_generators: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]
    type: int


def basic_invariants(S: NumericalSemigroup) -> SemigroupInvariants:
    return SemigroupInvariants(
        multiplicity=S.multiplicity,
        conductor=S.conductor,
        frobenius=S.frobenius,
        genus=S.genus,
        n=S.n,
        small_elements=S.small_elements,
        gaps=S.gaps,
        minimal_generators=S.minimal_generators,
        pseudo_frobenius=S.pseudo_frobenius,
        type=S.type,
    )


@dataclass(frozen=True)
class SemigroupPredicates:
    is_gorenstein: bool
    is_arf: bool


def is_arf(S: NumericalSemigroup) -> bool:
    """Whether s + t - u is a member for all members s >= t >= u.

    Triples with s >= conductor are automatic because s + t - u >= s, so
    the scan only needs s among the small elements below the conductor.
    """
    small = S.small_elements[:-1] if S.conductor > 0 else (0,)
    for si, s in enumerate(small):
        for ti in range(si + 1):
            t = small[ti]
            for ui in range(ti + 1):
                if s + t - small[ui] not in S:
                    return False
    return True


def predicates(S: NumericalSemigroup) -> SemigroupPredicates:
    gor = S.is_gorenstein
    # The symmetry condition and type 1 characterize the same rings.
    assert gor == (S.type == 1)
    return SemigroupPredicates(is_gorenstein=gor, is_arf=is_arf(S))


def _add_gap(S: NumericalSemigroup, g: int) -> NumericalSemigroup:
    """S with one gap filled in (callers guarantee closure)."""
    if g != S.conductor - 1:
        return NumericalSemigroup(S.conductor, S.mask | (1 << g))
    gap_bits = ~S.mask & _ones(S.conductor) & ~(1 << g)
    new_c = gap_bits.bit_length()
    return NumericalSemigroup(new_c, S.mask & _ones(new_c))


def oversemigroups(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """All numerical semigroups containing S, including S and N.

    A minimal step up fills a pseudo-Frobenius gap g with 2g a member (these
    are exactly the gaps whose addition keeps the set closed), and any
    strictly larger semigroup contains such a step: its largest extra member
    works.  The search therefore reaches everything.

    Ordered by descending genus and then by small elements, so S comes
    first and N last.
    """
    seen = {S}
    stack = [S]
    while stack:
        T = stack.pop()
        for g in T.pseudo_frobenius:
            if g >= 1 and 2 * g in T:
                T2 = _add_gap(T, g)
                if T2 not in seen:
                    seen.add(T2)
                    stack.append(T2)
    return sorted(seen, key=lambda T: (-T.genus, T.small_elements))
