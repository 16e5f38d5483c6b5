"""Ring-level classification: distinguished classes and the small-b catalogue.

``ring_classification`` evaluates the symmetric, almost-symmetric and
maximal-length properties by several independent routes, plus the
seven-way equivalence that characterizes the almost-symmetric case by the
behaviour of duality on every non-principal ideal of a window family.

``window_profile`` analyses the quotient by the tail-plus-multiplicity
ideal and verifies the splitting of b = b(tail) it induces.

``classify_b`` buckets a non-symmetric semigroup by comparing b with the
type r and, for b <= r, verifies the complete list of member patterns,
type-sequence patterns, and quotient lengths that the classification
asserts for that bucket; any miss is reported as a failed check rather
than an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateDVR
from .ideals import (
    RelativeIdeal,
    bidual,
    canonical_ideal,
    colon,
    dual,
    ideal_intersection,
    ideal_product,
    ideal_union,
    is_principal,
    is_reflexive,
    length_between,
    maximal_ideal,
    principal_ideal,
    tail_ideal,
    unit_ideal,
)
from .invariants import Check, _eq, _ge, _le, ab_invariants, type_sequence
from .semigroup import NumericalSemigroup, from_small_elements


def b_of_tail(S: NumericalSemigroup) -> int:
    """b of the tail ideal by the closed count r*(c - genus) - genus."""
    if S.conductor == 0:
        return 0
    return S.type * (S.conductor - S.genus) - S.genus


# -- ring classification -------------------------------------------------------


@dataclass(frozen=True)
class RingClassification:
    semigroup: str
    gorenstein: bool
    almost_gorenstein: bool
    maximal_length: bool
    equivalences: dict[str, bool]
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _bool_eq(cid: str, lhs: bool, rhs: bool) -> Check:
    return Check(cid, lhs == rhs, int(lhs), int(rhs))


def ring_classification(
    S: NumericalSemigroup,
    window: int = 2,
    ideals: list[RelativeIdeal] | None = None,
) -> RingClassification:
    """Classify S and verify the duality equivalences over an ideal family.

    The family defaults to every proper integral ideal whose conductor is
    within ``window`` of the conductor of S.  Quantified conditions range
    over the non-principal members: translates of S satisfy none of the
    canonical-module identities except in the trivial direction, and the
    equivalence genuinely fails if they are included.
    """
    if ideals is None:
        from .census import enumerate_ideals

        ideals = list(enumerate_ideals(S, window))
    r = S.type
    delta = S.genus
    c = S.conductor
    n = S.n
    ts = type_sequence(S).values
    unit = unit_ideal(S)
    K = canonical_ideal(S)
    m = maximal_ideal(S)

    gor = 2 * delta == c
    ag_numeric = r - 1 == 2 * delta - c
    ag_product = ideal_product(K, m) == m
    ag_ts = n == 0 or (ts[0] == r and all(v == 1 for v in ts[1:]))
    ml_numeric = r * (c - delta) == delta
    ml_ts = all(v == r for v in ts)

    checks: list[Check] = [
        _bool_eq("almost_symmetric_product_vs_count", ag_product, ag_numeric),
        _bool_eq("almost_symmetric_type_seq_vs_count", ag_ts, ag_numeric),
        _bool_eq("maximal_length_type_seq_vs_count", ml_ts, ml_numeric),
        _bool_eq("symmetric_iff_canonical_trivial", gor, K == unit),
    ]

    non_principal = [I for I in ideals if not is_principal(I)]
    reflexive_np = [I for I in non_principal if is_reflexive(I)]

    cond_omega_bidual = all(
        ideal_product(K, I) == bidual(I) for I in non_principal
    )
    cond_length_sym = True
    for I in reflexive_np:
        for J in reflexive_np:
            if J is not I and J.is_subset_of(I):
                if length_between(I, J) != length_between(dual(J), dual(I)):
                    cond_length_sym = False
                    break
        if not cond_length_sym:
            break
    cond_tail_dual = all(
        length_between(I, tail_ideal(S, I.conductor))
        == length_between(tail_ideal(S, c - I.conductor), dual(I))
        for I in reflexive_np
    )
    cond_a_formula = all(
        ab_invariants(S, I)[0]
        == r - 1 - length_between(bidual(I), I)
        for I in non_principal
    )

    for cid, cond in (
        ("equiv_type_seq_pattern", ag_ts),
        ("equiv_omega_mult_is_bidual", cond_omega_bidual),
        ("equiv_length_symmetry", cond_length_sym),
        ("equiv_tail_dual_length", cond_tail_dual),
        ("equiv_a_reflexive_defect", cond_a_formula),
        ("equiv_canonical_stable_max_ideal", ag_product),
    ):
        checks.append(_bool_eq(cid, cond, ag_numeric))

    # Maximal length happens exactly when b dies on every ideal above the tail.
    family_above_tail = [I for I in ideals if I.conductor == c]
    ml_by_b = all(ab_invariants(S, I)[1] == 0 for I in family_above_tail)
    checks.append(_bool_eq("maximal_length_iff_b_dies_above_tail", ml_by_b, ml_numeric))
    # Symmetric rings are exactly those with a = 0 everywhere.
    a_everywhere_zero = all(ab_invariants(S, I)[0] == 0 for I in ideals)
    checks.append(_bool_eq("symmetric_iff_a_vanishes", a_everywhere_zero, gor))

    return RingClassification(
        semigroup=S.encode(),
        gorenstein=gor,
        almost_gorenstein=ag_numeric,
        maximal_length=ml_numeric,
        equivalences={
            "almost_symmetric_count": ag_numeric,
            "type_seq_pattern": ag_ts,
            "omega_mult_is_bidual": cond_omega_bidual,
            "length_symmetry": cond_length_sym,
            "tail_dual_length": cond_tail_dual,
            "a_reflexive_defect": cond_a_formula,
            "canonical_stable_max_ideal": ag_product,
        },
        checks=tuple(checks),
    )


# -- tail-plus-multiplicity profile ---------------------------------------------


@dataclass(frozen=True)
class WindowProfile:
    """Data of the quotient by tail + (multiplicity + S) and the b split."""

    semigroup: str
    b: int
    quotient_length: int
    p: int
    gap_count: int
    z: int
    late_indices: tuple[int, ...]
    early_indices: tuple[int, ...]
    classification_tag: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def window_profile(S: NumericalSemigroup) -> WindowProfile:
    """Profile of l(S / tail + (e + S)) and the induced split of b.

    Undefined for S = N, where the tail is the whole semigroup.
    """
    if S.conductor == 0:
        raise DegenerateDVR("the profile needs a nonzero conductor")
    e = S.multiplicity
    c = S.conductor
    n = S.n
    r = S.type
    delta = S.genus
    small = S.small_elements
    ts = type_sequence(S)
    unit = unit_ideal(S)
    gamma = tail_ideal(S, c)

    # z is the least member with z + e past the conductor.
    z = next(s for s in small if s >= c - e)
    late = tuple(h for h in range(1, n + 1) if small[h] > z)
    early = tuple(h for h in range(1, n + 1) if small[h] <= z)

    enlarged = ideal_union(gamma, principal_ideal(S, e))
    l_quot = length_between(unit, enlarged)
    # Independent count: members below c whose difference with e is a gap.
    direct = sum(1 for s in small[:-1] if s - e not in S)
    socle = ideal_intersection(colon(gamma, maximal_ideal(S)), unit)
    l_socle = length_between(socle, gamma)
    direct_socle = sum(1 for s in small[:-1] if s >= c - e)

    b = b_of_tail(S)
    b_by_ts = sum(r - v for v in ts.values)
    p = (c - 1) // e
    gap_count = sum(1 for x in range(p * e + 1, c) if x not in S)

    checks = [
        _eq("profile_quotient_two_counts", l_quot, direct),
        _eq("profile_socle_two_counts", l_socle, direct_socle),
        _eq("profile_late_count_is_quotient", len(late), l_quot),
        _eq("profile_late_count_is_socle", len(late), l_socle),
        _ge("profile_quotient_at_least_e_minus_r", l_quot, e - r),
        _ge("profile_e_minus_r_positive", e - r, 1),
        _le("profile_late_sum_bound", ts.sum_r(late), e - 1),
        _eq(
            "profile_b_split",
            b + ts.sum_r(late),
            sum(r - ts.r(h) for h in early) + r * l_quot,
        ),
        _le("profile_b_split_upper", b + ts.sum_r(late), b + e - 1),
        _ge(
            "profile_b_lower_bound",
            b,
            (r - 1) * (e - r - 1) + sum(r - ts.r(h) for h in early),
        ),
        _le("profile_p_lower", c - e, p * e),
        _le("profile_p_upper", p * e, c - 1),
        _ge("profile_gap_count_lower", gap_count, 1),
        _le("profile_gap_count_upper", gap_count, e - 1),
        _eq("profile_b_two_paths", b, b_by_ts),
    ]
    for q in (1, 2):
        if b < q * (r - 1):
            checks.append(
                Check(
                    f"profile_quotient_window_q{q}",
                    e - r <= l_quot <= q,
                    l_quot,
                    q,
                )
            )
    if 0 <= b < r - 1:
        checks.append(_eq("profile_small_b_forces_type", r, e - 1))
        checks.append(_eq("profile_small_b_forces_quotient", l_quot, 1))
    if r - 1 < b < 2 * (r - 1):
        checks.append(
            Check("profile_mid_b_bounds_type", e - 2 <= r <= e - 1, r, e)
        )
        checks.append(_eq("profile_mid_b_forces_quotient", l_quot, 2))

    return WindowProfile(
        semigroup=S.encode(),
        b=b,
        quotient_length=l_quot,
        p=p,
        gap_count=gap_count,
        z=z,
        late_indices=late,
        early_indices=early,
        classification_tag=classify_b(S).tag,
        checks=tuple(checks),
    )


# -- the small-b catalogue -------------------------------------------------------


@dataclass(frozen=True)
class ClassificationOutcome:
    semigroup: str
    tag: str
    parameters: dict[str, int | str]
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _multiples_then_tail(S: NumericalSemigroup) -> tuple[bool, int]:
    """Whether the members below c are exactly 0, e, 2e, ..., pe."""
    e = S.multiplicity
    below = S.small_elements[:-1]
    ok = all(below[i] == i * e for i in range(len(below)))
    return ok, len(below) - 1


def _head_constant_ts(S: NumericalSemigroup, value: int) -> bool:
    """Whether the type sequence reads (value, ..., value, r_n)."""
    ts = type_sequence(S).values
    return len(ts) >= 1 and all(v == value for v in ts[:-1])


def matches_small_b_value_pattern(S: NumericalSemigroup) -> bool:
    """Members 0, e, ..., pe with pe + 2 < c: the strict-b-deficit pattern."""
    ok, p = _multiples_then_tail(S)
    return ok and p * S.multiplicity + 2 < S.conductor


def matches_small_b_ts_pattern(S: NumericalSemigroup) -> bool:
    """Type sequence (e-1, ..., e-1, r_n) with a final entry above 1."""
    if S.conductor == 0:
        return False
    if S.type != S.multiplicity - 1:
        return False
    ts = type_sequence(S).values
    return _head_constant_ts(S, S.multiplicity - 1) and ts[-1] > 1


def _two_gen_doubles(e: int) -> NumericalSemigroup:
    return from_small_elements([0, e, 2 * e - 1, 2 * e], 3 * e - 1)


def _case_g_shapes(S: NumericalSemigroup):
    """Match against the four b = r shapes with type e - 2."""
    e = S.multiplicity
    small = S.small_elements
    if S == from_small_elements([0, 4, 8, 9, 12, 13], 16):
        return {"family": "sporadic_quad", "e": 4}
    if S == from_small_elements([0, 4, 8, 11, 12, 15, 16], 19):
        return {"family": "sporadic_quad_long", "e": 4}
    if (
        e >= 4
        and len(small) == 5
        and small == (0, e, 2 * e - 2, 2 * e, 3 * e - 2)
    ):
        return {"family": "double_step", "e": e}
    if e >= 4 and len(small) == 4 and small[3] == 2 * e - 1:
        z = small[2] - e
        if 1 <= z and 2 * z <= e - 2 and small == (0, e, e + z, 2 * e - 1):
            return {"family": "short_third", "e": e, "z": z}
    return None


_CASE_J_SETS = (
    ([0, 5, 6, 7], 10),
    ([0, 5, 6, 8], 10),
    ([0, 5, 8, 9, 10], 13),
)


def case_j_semigroups() -> tuple[NumericalSemigroup, ...]:
    """The three b = r semigroups of type 2 and multiplicity 5."""
    return tuple(from_small_elements(m, c) for m, c in _CASE_J_SETS)


def quotient_length(S: NumericalSemigroup) -> int:
    """l(S / tail + (e + S)), the pivot of the small-b classification."""
    gamma = tail_ideal(S, S.conductor)
    enlarged = ideal_union(gamma, principal_ideal(S, S.multiplicity))
    return length_between(unit_ideal(S), enlarged)


TAG_GORENSTEIN = "GORENSTEIN"
TAG_B_LT = "B_LT_R_MINUS_1"
TAG_B_EQ_RM1_CASE1 = "B_EQ_R_MINUS_1_CASE1"
TAG_B_EQ_RM1_CASE2 = "B_EQ_R_MINUS_1_CASE2"
TAG_B_EQ_R_G = "B_EQ_R_CASE_G"
TAG_B_EQ_R_J = "B_EQ_R_CASE_J"
TAG_B_GT = "B_GT_R"


def classify_b(S: NumericalSemigroup) -> ClassificationOutcome:
    """Tag S by the position of b = b(tail) relative to the type.

    For every b <= r tag the asserted member pattern, type-sequence
    pattern and quotient length are verified independently; a pattern miss
    is reported as a failed check so censuses can surface it.
    """
    if S.conductor == 0 or S.is_gorenstein:
        return ClassificationOutcome(S.encode(), TAG_GORENSTEIN, {}, ())
    e = S.multiplicity
    c = S.conductor
    r = S.type
    b = b_of_tail(S)
    checks: list[Check] = []
    params: dict[str, int | str] = {"b": b, "r": r, "e": e}

    if b < r - 1:
        _, p = _multiples_then_tail(S)
        params["p"] = p
        ts = type_sequence(S).values
        value_ok = matches_small_b_value_pattern(S)
        ts_ok = matches_small_b_ts_pattern(S)
        checks.append(Check("classify_value_pattern", value_ok, int(value_ok), 1))
        checks.append(Check("classify_ts_pattern", ts_ok, int(ts_ok), 1))
        checks.append(_eq("classify_quotient_length", quotient_length(S), 1))
        checks.append(_eq("classify_conductor_value", c, (p + 1) * e - b))
        checks.append(_eq("classify_type_value", r, e - 1))
        checks.append(_eq("classify_last_entry", ts[-1], e - 1 - b))
        return ClassificationOutcome(S.encode(), TAG_B_LT, params, tuple(checks))

    if b == r - 1:
        if r == e - 1:
            mult_ok, p = _multiples_then_tail(S)
            params["p"] = p
            ts = type_sequence(S).values
            checks.append(
                Check("classify_value_pattern", mult_ok and c == p * e + 2, int(mult_ok and c == p * e + 2), 1)
            )
            checks.append(
                Check(
                    "classify_ts_pattern",
                    _head_constant_ts(S, e - 1) and ts[-1] == 1,
                    int(_head_constant_ts(S, e - 1) and ts[-1] == 1),
                    1,
                )
            )
            checks.append(_eq("classify_quotient_length", quotient_length(S), 1))
            return ClassificationOutcome(
                S.encode(), TAG_B_EQ_RM1_CASE1, params, tuple(checks)
            )
        checks.append(_eq("classify_type_value", r, e - 2))
        ts = type_sequence(S).values
        small = S.small_elements
        fam = None
        if len(small) == 5 and S == _two_gen_doubles(e):
            fam = {"family": "double_gap", "e": e}
            ts_ok = (
                len(ts) == 4
                and ts[0] == e - 2
                and ts[1] == e - 2
                and ts[2] + ts[3] == e - 1
            )
        elif len(small) == 4 and small[3] == 2 * e:
            y = small[2]
            if e < y and 2 * y <= 3 * e - 1 and small == (0, e, y, 2 * e):
                fam = {"family": "middle_member", "e": e, "y": y}
                ts_ok = len(ts) == 3 and ts[0] == e - 2 and ts[1] + ts[2] == e - 1
        if fam is None:
            checks.append(Check("classify_value_pattern", False, 0, 1))
        else:
            params.update(fam)
            checks.append(Check("classify_value_pattern", True, 1, 1))
            checks.append(Check("classify_ts_pattern", ts_ok, int(ts_ok), 1))
        checks.append(_eq("classify_quotient_length", quotient_length(S), 2))
        return ClassificationOutcome(
            S.encode(), TAG_B_EQ_RM1_CASE2, params, tuple(checks)
        )

    if b == r:
        shape = _case_g_shapes(S)
        if shape is not None:
            params.update(shape)
            checks.append(_eq("classify_type_value", r, e - 2))
            checks.append(_eq("classify_quotient_length", quotient_length(S), 2))
            return ClassificationOutcome(
                S.encode(), TAG_B_EQ_R_G, params, tuple(checks)
            )
        in_j = S in case_j_semigroups()
        checks.append(Check("classify_value_pattern", in_j, int(in_j), 1))
        checks.append(_eq("classify_type_value", r, 2))
        checks.append(_eq("classify_multiplicity_value", e, 5))
        checks.append(_eq("classify_quotient_length", quotient_length(S), 3))
        return ClassificationOutcome(S.encode(), TAG_B_EQ_R_J, params, tuple(checks))

    return ClassificationOutcome(S.encode(), TAG_B_GT, params, ())
