"""Relative ideals of a numerical semigroup and their exact arithmetic.

A relative ideal E of S is a set of integers, bounded below, with
E + S inside E.  The normal form is ``(min_element, conductor, mask)``:
bit i of ``mask`` records membership of ``min_element + i`` for the window
[min_element, conductor), and every integer >= conductor is a member.  The
conductor is tight (conductor - 1 is never a member) and ``min_element``
is the least member, so equal ideals have equal normal forms.

Each operation computes membership on a finite window that provably
contains all undecided values; the one-line justification for the window
bounds sits next to each implementation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    EmptyGenerators,
    EncodingError,
    NotContained,
    NotIntegralProper,
    ParentMismatch,
)
from .semigroup import NumericalSemigroup, _ones


class RelativeIdeal:
    """Immutable relative ideal in ``(min_element, conductor, mask)`` form."""

    __slots__ = ("parent", "min_element", "conductor", "mask", "_dual")

    def __init__(
        self,
        parent: NumericalSemigroup,
        min_element: int,
        conductor: int,
        mask: int,
    ):
        width = conductor - min_element
        if width < 0:
            raise ValueError("conductor below the minimum")
        if width == 0:
            if mask:
                raise ValueError("window is empty but bits are set")
        else:
            if not mask & 1:
                raise ValueError("the minimum must be a member")
            if (mask >> (width - 1)) & 1:
                raise ValueError("conductor - 1 must not be a member")
        self.parent = parent
        self.min_element = min_element
        self.conductor = conductor
        self.mask = mask
        self._dual: RelativeIdeal | None = None

    # -- membership and views ------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x >= self.conductor:
            return True
        if x < self.min_element:
            return False
        return bool((self.mask >> (x - self.min_element)) & 1)

    def bits_below(self, stop: int) -> int:
        """Membership bits for [min_element, stop), tail filled in."""
        rel = stop - self.min_element
        if rel <= 0:
            return 0
        width = self.conductor - self.min_element
        if rel <= width:
            return self.mask & _ones(rel)
        return self.mask | (_ones(rel - width) << width)

    @property
    def window_members(self) -> tuple[int, ...]:
        """Members below the conductor, in increasing order."""
        out = []
        bits = self.mask
        while bits:
            low = bits & -bits
            out.append(self.min_element + low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def is_subset_of(self, other: "RelativeIdeal") -> bool:
        if self.parent != other.parent:
            raise ParentMismatch("ideals belong to different semigroups")
        lo = min(self.min_element, other.min_element)
        hi = max(self.conductor, other.conductor)
        mine = self.bits_below(hi) << (self.min_element - lo)
        theirs = other.bits_below(hi) << (other.min_element - lo)
        return mine & ~theirs == 0

    # -- encoding ------------------------------------------------------------

    def encode(self) -> str:
        """Canonical text form: ``min|members below conductor|conductor``."""
        body = ",".join(str(x) for x in self.window_members)
        return f"{self.min_element}|{body}|{self.conductor}"

    @classmethod
    def decode(cls, parent: NumericalSemigroup, text: str) -> "RelativeIdeal":
        parts = text.split("|")
        if len(parts) != 3:
            raise EncodingError(f"bad ideal encoding: {text!r}")
        try:
            mn = int(parts[0])
            cond = int(parts[2])
            members = [int(t) for t in parts[1].split(",") if t != ""]
        except ValueError as exc:
            raise EncodingError(f"bad ideal encoding: {text!r}") from exc
        bits = 0
        for x in members:
            if x < mn or x >= cond:
                raise EncodingError(f"member {x} outside [{mn}, {cond})")
            bits |= 1 << (x - mn)
        E = _normalized(parent, mn, cond, bits)
        if E.min_element != mn or E.conductor != cond:
            raise EncodingError(f"encoding {text!r} is not in normal form")
        # The set must actually absorb addition by the parent.
        for x in E.window_members:
            shifted = parent.bits_below(cond - x) << (x - mn)
            if shifted & ~E.bits_below(cond):
                raise EncodingError(f"{text!r} is not an ideal: {x} + S escapes")
        return E

    # -- value identity --------------------------------------------------------

    def sort_key(self) -> tuple[int, int, int]:
        return (self.min_element, self.conductor, self.mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.parent == other.parent
            and self.min_element == other.min_element
            and self.conductor == other.conductor
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.min_element, self.conductor, self.mask))

    def __repr__(self) -> str:
        return f"RelativeIdeal({self.parent.encode()!r}, {self.encode()!r})"

    def __reduce__(self):
        return (
            RelativeIdeal,
            (self.parent, self.min_element, self.conductor, self.mask),
        )


def _normalized(
    parent: NumericalSemigroup, lo: int, hi: int, bits: int
) -> RelativeIdeal:
    """Build the normal form from membership bits on [lo, hi).

    Callers guarantee every integer >= hi is a member and none below lo is.
    """
    width = hi - lo
    bits &= _ones(width)
    k = width
    while k > 0 and (bits >> (k - 1)) & 1:
        k -= 1
    cond = lo + k
    win = bits & _ones(k)
    if win:
        mn = lo + (win & -win).bit_length() - 1
    else:
        mn = cond
    return RelativeIdeal(parent, mn, cond, win >> (mn - lo))


# -- constructors -------------------------------------------------------------


def unit_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """S viewed as an ideal over itself."""
    return RelativeIdeal(S, 0, S.conductor, S.mask)


def tail_ideal(S: NumericalSemigroup, start: int) -> RelativeIdeal:
    """The ideal of all integers >= start."""
    return RelativeIdeal(S, start, start, 0)


def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """Nonzero members of S; for S = N this is the tail from 1."""
    if S.conductor == 0:
        return tail_ideal(S, 1)
    e = S.multiplicity
    return RelativeIdeal(
        S, e, S.conductor, (S.mask >> e) & _ones(S.conductor - e)
    )


def principal_ideal(S: NumericalSemigroup, g: int) -> RelativeIdeal:
    """The translate g + S (window bits equal those of S)."""
    return RelativeIdeal(S, g, g + S.conductor, S.mask)


def ideal_from_generators(S: NumericalSemigroup, generators) -> RelativeIdeal:
    """Union of the translates g + S over the generating integers.

    Window: everything >= min(generators) + conductor(S) lies in the
    translate of the least generator, so [min, min + c) decides the form.
    """
    gens = sorted({int(g) for g in generators})
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = gens[0]
    hi = lo + S.conductor
    acc = 0
    for g in gens:
        acc |= S.bits_below(hi - g) << (g - lo)
    return _normalized(S, lo, hi, acc)


# -- arithmetic ----------------------------------------------------------------


def colon(A: RelativeIdeal, B: RelativeIdeal, _pad: int = 0) -> RelativeIdeal:
    """The ideal quotient A - B = {z : z + B inside A}.

    Window: z >= conductor(A) - min(B) shifts all of B into the tail of A,
    and z < min(A) - min(B) sends min(B) below min(A); so the window
    [min(A) - min(B), conductor(A) - min(B)) decides membership.  For each
    z only b < conductor(A) - z matter, since larger b land in A's tail.
    ``_pad`` widens the window for self-checks; the result cannot change.
    """
    if A.parent != B.parent:
        raise ParentMismatch("ideals belong to different semigroups")
    lo = A.min_element - B.min_element - _pad
    hi = A.conductor - B.min_element + _pad
    a_bits = A.mask
    acc = 0
    for idx in range(hi - lo):
        z = lo + idx
        shift = z + B.min_element - A.min_element
        need = B.bits_below(A.conductor - z)
        if shift >= 0:
            if (need << shift) & ~a_bits == 0:
                acc |= 1 << idx
        else:
            # Bits below min(A) must be empty for z to qualify.
            if need & _ones(-shift) == 0 and (need >> -shift) & ~a_bits == 0:
                acc |= 1 << idx
    return _normalized(A.parent, lo, hi, acc)


def dual(E: RelativeIdeal) -> RelativeIdeal:
    """S - E, cached on the instance (idempotent, so safe to race)."""
    if E._dual is None:
        E._dual = colon(unit_ideal(E.parent), E)
    return E._dual


def bidual(E: RelativeIdeal) -> RelativeIdeal:
    return dual(dual(E))


def ideal_product(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """Sumset E + F (the ideal product in the value model).

    Window: everything >= conductor(E) + min(F) is min(F) plus a tail
    member of E, and symmetrically; the smaller of the two bounds is used.
    """
    if E.parent != F.parent:
        raise ParentMismatch("ideals belong to different semigroups")
    if E.conductor + F.min_element > F.conductor + E.min_element:
        E, F = F, E
    lo = E.min_element + F.min_element
    hi = E.conductor + F.min_element
    acc = 0
    fb = F.bits_below(hi - E.min_element)
    while fb:
        low = fb & -fb
        j = low.bit_length() - 1
        fb ^= low
        acc |= E.bits_below(hi - (F.min_element + j)) << j
    return _normalized(E.parent, lo, hi, acc)


def ideal_union(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """Module sum E + F as sets (union of members)."""
    if E.parent != F.parent:
        raise ParentMismatch("ideals belong to different semigroups")
    lo = min(E.min_element, F.min_element)
    hi = max(E.conductor, F.conductor)
    acc = (E.bits_below(hi) << (E.min_element - lo)) | (
        F.bits_below(hi) << (F.min_element - lo)
    )
    return _normalized(E.parent, lo, hi, acc)


def ideal_intersection(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    if E.parent != F.parent:
        raise ParentMismatch("ideals belong to different semigroups")
    lo = max(E.min_element, F.min_element)
    hi = max(E.conductor, F.conductor)
    acc = (E.bits_below(hi) >> (lo - E.min_element)) & (
        F.bits_below(hi) >> (lo - F.min_element)
    )
    return _normalized(E.parent, lo, hi, acc)


def length_between(E: RelativeIdeal, F: RelativeIdeal) -> int:
    """l(E/F): the number of members of E outside F (F must sit inside E)."""
    if E.parent != F.parent:
        raise ParentMismatch("ideals belong to different semigroups")
    lo = min(E.min_element, F.min_element)
    hi = max(E.conductor, F.conductor)
    e_bits = E.bits_below(hi) << (E.min_element - lo)
    f_bits = F.bits_below(hi) << (F.min_element - lo)
    if f_bits & ~e_bits:
        raise NotContained("l(E/F) needs F inside E")
    return (e_bits & ~f_bits).bit_count()


# -- canonical ideal and friends ------------------------------------------------


@functools.lru_cache(maxsize=4096)
def canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """K = {x : frobenius - x is a gap}; satisfies S <= K <= N.

    Window: for x >= conductor the difference drops below 0, always a gap,
    and for x < 0 it exceeds the frobenius, always a member; so K has
    minimum 0 and conductor equal to S's.
    """
    c = S.conductor
    bits = 0
    for x in range(c):
        if not (S.mask >> (c - 1 - x)) & 1:
            bits |= 1 << x
    return RelativeIdeal(S, 0, c, bits)


@functools.lru_cache(maxsize=4096)
def dedekind_different(S: NumericalSemigroup) -> RelativeIdeal:
    """S - K; equals S exactly in the symmetric (type 1) case."""
    return colon(unit_ideal(S), canonical_ideal(S))


def require_proper(E: RelativeIdeal) -> None:
    """Raise unless E is integral (inside S) and proper (0 not a member)."""
    if E.min_element < 1:
        raise NotIntegralProper("0 must not be a member")
    if E.conductor < E.parent.conductor or not E.is_subset_of(
        unit_ideal(E.parent)
    ):
        raise NotIntegralProper("the ideal must sit inside its semigroup")


@dataclass(frozen=True)
class GammaProfile:
    """Tail data attached to a proper integral ideal.

    ``gamma_ideal`` is the tail from the ideal conductor c_I; its dual over
    the parent is the tail from c - c_I, recorded as ``parent_colon_gamma``.
    """

    ideal_conductor: int
    n_relative: int
    gamma_ideal: RelativeIdeal
    parent_colon_gamma: RelativeIdeal


def gamma_of_ideal(E: RelativeIdeal) -> GammaProfile:
    require_proper(E)
    S = E.parent
    c_i = E.conductor
    profile = GammaProfile(
        ideal_conductor=c_i,
        n_relative=c_i - S.genus,
        gamma_ideal=tail_ideal(S, c_i),
        parent_colon_gamma=tail_ideal(S, S.conductor - c_i),
    )
    # n_I >= n always, since the ideal conductor is at least the conductor.
    assert profile.n_relative >= S.n
    return profile


def integral_closure(E: RelativeIdeal) -> RelativeIdeal:
    """Members of S at or above min(E): the largest ideal with E's minimum."""
    require_proper(E)
    S = E.parent
    m = E.min_element
    if m >= S.conductor:
        return tail_ideal(S, m)
    return RelativeIdeal(S, m, S.conductor, (S.mask >> m) & _ones(S.conductor - m))


def is_integrally_closed(E: RelativeIdeal) -> bool:
    return E == integral_closure(E)


def is_reflexive(E: RelativeIdeal) -> bool:
    return bidual(E) == E


def is_omega_stable(E: RelativeIdeal) -> bool:
    """Whether K + E = E, i.e. E is a module over the canonical ideal."""
    return ideal_product(canonical_ideal(E.parent), E) == E


def is_principal(E: RelativeIdeal) -> bool:
    """Whether E is a translate g + S (g is forced to be the minimum)."""
    return E == principal_ideal(E.parent, E.min_element)
