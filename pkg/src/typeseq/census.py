"""Exhaustive enumeration of semigroups and ideals, with theorem censuses.

Semigroups are walked as a tree rooted at N: the children of S are the
sets S minus one minimal generator above the Frobenius number.  Every
numerical semigroup other than N arises exactly once this way (adjoining
the Frobenius number is the inverse step), genus grows by one per edge
and the conductor grows strictly, so pruning by either bound is complete.

Proper integral ideals are enumerated per ideal conductor c_E in a
window above the conductor of S: members below c_E are chosen by a
depth-first walk over the members of S in [1, c_E) in which including x
forces every x + s that lands below c_E, and c_E - 1 is never allowed in
(that keeps the stored conductor tight, so each ideal appears once).

``verify_theorems`` runs named groups of checks over every enumerated
semigroup (and ideal family); violations are collected, never raised, so
a census documents exactly which identities hold on which range.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classification import (
    TAG_B_EQ_R_G,
    TAG_B_EQ_R_J,
    TAG_B_EQ_RM1_CASE1,
    TAG_B_EQ_RM1_CASE2,
    TAG_B_LT,
    b_of_tail,
    case_j_semigroups,
    classify_b,
    matches_small_b_ts_pattern,
    matches_small_b_value_pattern,
    ring_classification,
    window_profile,
)
from .errors import BoundTooLarge, WindowTooLarge
from .ideals import (
    RelativeIdeal,
    bidual,
    canonical_ideal,
    colon,
    dedekind_different,
    dual,
    ideal_intersection,
    ideal_product,
    ideal_union,
    is_omega_stable,
    length_between,
    maximal_ideal,
    tail_ideal,
)
from .invariants import (
    Check,
    _eq,
    _le,
    _tail_members_ideal,
    ab_invariants,
    d_invariant,
    decomposition_check,
    extended_type_sequence,
    overring_check,
    sigma,
    type_sequence,
)
from .semigroup import NumericalSemigroup, is_arf, oversemigroups

GROUPS = (
    "semigroup",
    "ideals",
    "pairs",
    "colon_growth",
    "equivalences",
    "overrings",
    "profile",
    "classification",
)

_CLASS_TAGS_TRACKED = (
    TAG_B_LT,
    TAG_B_EQ_RM1_CASE1,
    TAG_B_EQ_RM1_CASE2,
    TAG_B_EQ_R_G,
    TAG_B_EQ_R_J,
)


_DEFAULT_GENUS_GUARD = 12
_CONDUCTOR_GUARD = 30
_WINDOW_GUARD = 3


def _genus_guard() -> int:
    return int(os.environ.get("TYPESEQ_MAX_GENUS", str(_DEFAULT_GENUS_GUARD)))


@dataclass(frozen=True)
class CensusQuery:
    """Range and options for one census run.

    Exactly one of ``max_genus``, ``max_conductor`` or ``semigroups``
    (explicit encodings) selects the population.
    """

    max_genus: int | None = None
    max_conductor: int | None = None
    semigroups: tuple[str, ...] | None = None
    window: int = 2
    multiplicity_range: tuple[int, int] | None = None
    gorenstein_only: bool = False
    non_gorenstein_only: bool = False
    checks: tuple[str, ...] = ("all",)
    workers: int = 1
    sample_limit: int = 64
    allow_large: bool = False

    def __post_init__(self):
        selectors = sum(
            x is not None
            for x in (self.max_genus, self.max_conductor, self.semigroups)
        )
        if selectors != 1:
            raise ValueError(
                "exactly one of max_genus, max_conductor, semigroups required"
            )
        if self.gorenstein_only and self.non_gorenstein_only:
            raise ValueError("gorenstein_only conflicts with non_gorenstein_only")
        bad = [g for g in self.groups() if g not in GROUPS]
        if bad:
            raise ValueError(f"unknown check groups: {bad}")
        if not self.allow_large:
            guard = _genus_guard()
            cond_guard = max(_CONDUCTOR_GUARD, 2 * guard)
            if self.max_genus is not None and self.max_genus > guard:
                raise BoundTooLarge(
                    f"max_genus {self.max_genus} above guard {guard}"
                )
            if self.max_conductor is not None and self.max_conductor > cond_guard:
                raise BoundTooLarge(
                    f"max_conductor {self.max_conductor} above guard {cond_guard}"
                )
            if self.window > _WINDOW_GUARD:
                raise WindowTooLarge(
                    f"window {self.window} above guard {_WINDOW_GUARD}"
                )
        if self.window < 0:
            raise ValueError("window must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def groups(self) -> tuple[str, ...]:
        if "all" in self.checks:
            return GROUPS
        return tuple(self.checks)

    def to_dict(self) -> dict:
        return {
            "max_genus": self.max_genus,
            "max_conductor": self.max_conductor,
            "semigroups": list(self.semigroups) if self.semigroups else None,
            "window": self.window,
            "multiplicity_range": (
                list(self.multiplicity_range) if self.multiplicity_range else None
            ),
            "gorenstein_only": self.gorenstein_only,
            "non_gorenstein_only": self.non_gorenstein_only,
            "checks": list(self.checks),
            "sample_limit": self.sample_limit,
        }


# -- enumeration -----------------------------------------------------------------


def _children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """S minus one minimal generator above the Frobenius number, each."""
    out = []
    for x in S.minimal_generators:
        if x > S.conductor - 1:
            bits = S.bits_below(x + 1) & ~(1 << x)
            out.append(NumericalSemigroup(x + 1, bits))
    out.sort(key=lambda T: T.encode())
    return out


def enumerate_semigroups(
    max_genus: int | None = None,
    max_conductor: int | None = None,
):
    """Depth-first stream of all semigroups within the given bounds."""
    if max_genus is None and max_conductor is None:
        raise ValueError("a genus or conductor bound is required")
    root = NumericalSemigroup(0, 0)
    stack = [root]
    while stack:
        S = stack.pop()
        if max_genus is not None and S.genus > max_genus:
            continue
        if max_conductor is not None and S.conductor > max_conductor:
            continue
        yield S
        stack.extend(reversed(_children(S)))


def enumerate_ideals(S: NumericalSemigroup, window: int) -> list[RelativeIdeal]:
    """All proper integral ideals with conductor within ``window`` of S's.

    For S = N the window alone supplies the conductors (the tails from
    1 through ``window`` are the only proper integral ideals there).
    """
    lo = max(S.conductor, 1)
    found: list[RelativeIdeal] = []
    for c_e in range(lo, S.conductor + window + 1):
        cands = [x for x in range(1, c_e) if x in S]
        pos = {x: k for k, x in enumerate(cands)}
        forbidden = pos.get(c_e - 1)

        def emit(chosen: int):
            members = [cands[k] for k in range(len(cands)) if (chosen >> k) & 1]
            m = members[0] if members else c_e
            mask = 0
            for x in members:
                mask |= 1 << (x - m)
            found.append(RelativeIdeal(S, m, c_e, mask))

        def walk(k: int, chosen: int, forced: int):
            if k == len(cands):
                emit(chosen)
                return
            if not (forced >> k) & 1:
                walk(k + 1, chosen, forced)
            if k == forbidden:
                return
            x = cands[k]
            new_forced = forced
            for j in range(k + 1, len(cands)):
                if cands[j] - x in S:
                    new_forced |= 1 << j
            walk(k + 1, chosen | (1 << k), new_forced)

        walk(0, 0, 0)
    found.sort(key=lambda E: E.sort_key())
    return found


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    semigroup: str
    ideal: str
    check_id: str
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {
            "semigroup": self.semigroup,
            "ideal": self.ideal,
            "check_id": self.check_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }

    def sort_key(self):
        return (self.semigroup, self.ideal, self.check_id, self.lhs, self.rhs)


@dataclass
class CensusReport:
    query: dict
    semigroup_count: int = 0
    ideal_count: int = 0
    semigroups_per_genus: dict[int, int] = field(default_factory=dict)
    check_tallies: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    classification_tallies: dict[str, int] = field(default_factory=dict)
    classification_members: dict[str, list[str]] = field(default_factory=dict)
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "query": self.query,
            "semigroup_count": self.semigroup_count,
            "ideal_count": self.ideal_count,
            "semigroups_per_genus": {
                str(g): self.semigroups_per_genus[g]
                for g in sorted(self.semigroups_per_genus)
            },
            "check_tallies": {
                k: self.check_tallies[k] for k in sorted(self.check_tallies)
            },
            "violations": [v.to_dict() for v in self.violations],
            "classification_tallies": {
                k: self.classification_tallies[k]
                for k in sorted(self.classification_tallies)
            },
            "classification_members": {
                k: sorted(self.classification_members[k])
                for k in sorted(self.classification_members)
            },
            "passed": self.passed,
        }
        if include_timing:
            out["wall_ms"] = self.wall_ms
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(
            self.to_dict(include_timing=include_timing),
            sort_keys=True,
            indent=2,
        )


class _Collector:
    """Accumulates tallies and violations from named checks."""

    def __init__(self):
        self.tallies: dict[str, int] = {}
        self.violations: list[Violation] = []

    def add(self, sg: str, ideal: str, checks) -> None:
        for c in checks:
            self.tallies[c.id] = self.tallies.get(c.id, 0) + 1
            if not c.passed:
                self.violations.append(Violation(sg, ideal, c.id, c.lhs, c.rhs))


# -- per-semigroup check groups ----------------------------------------------------


def _semigroup_group(S: NumericalSemigroup) -> list[Check]:
    r = S.type
    delta = S.genus
    c = S.conductor
    n = S.n
    ts = type_sequence(S)
    checks: list[Check] = [
        _eq("sg_ts_sum_is_genus", sum(ts.values), delta),
        _eq("sg_ts_deficit_sum", sum(v - 1 for v in ts.values), 2 * delta - c),
        _eq("sg_ts_extension_ones", sum(extended_type_sequence(S, n + 2)[n:]), 2),
    ]
    if n:
        checks.append(_eq("sg_ts_first_is_type", ts.values[0], r))
        checks.append(
            Check(
                "sg_ts_entries_in_range",
                all(1 <= v <= r for v in ts.values),
                min(ts.values),
                max(ts.values),
            )
        )
    if c:
        checks.append(_le("sg_type_bound", r, S.multiplicity - 1))
    checks.append(
        Check(
            "sg_gorenstein_iff_type_one",
            S.is_gorenstein == (r == 1),
            int(S.is_gorenstein),
            int(r == 1),
        )
    )
    arf = is_arf(S)
    acc_a = 0
    acc_b = 0
    for i in range(1, n + 1):
        acc_a += ts.values[i - 1] - 1
        acc_b += r - ts.values[i - 1]
        s_i = S.small_elements[i]
        a_i, b_i = ab_invariants(S, _tail_members_ideal(S, s_i))
        checks.append(_eq("sg_chain_a_partial", a_i, acc_a))
        checks.append(_eq("sg_chain_b_partial", b_i, acc_b))
        if arf:
            checks.append(_eq("sg_arf_dual_length", a_i + i, s_i - i))
            checks.append(
                _eq("sg_arf_chain_b", b_i, i * S.small_elements[1] - s_i)
            )
    for k in (1, 2):
        a_t, b_t = ab_invariants(S, tail_ideal(S, c + k))
        checks.append(_eq("sg_tail_a_constant", a_t, 2 * delta - c))
        checks.append(_eq("sg_tail_b_linear", b_t, acc_b + k * (r - 1)))
    if c:
        sig = sigma(S)
        K = canonical_ideal(S)
        theta = dedekind_different(S)
        for g in theta.window_members + (theta.conductor,):
            if g == 0:
                continue
            shifted = RelativeIdeal(S, g, g + K.conductor, K.mask)
            a_g, _ = ab_invariants(S, shifted)
            checks.append(_eq("sg_different_shift_a_is_sigma", a_g, sig))
        # second computation path: r_i as the growth of the K-products
        p_prev = K
        for i in range(1, n + 1):
            p_cur = ideal_product(K, _tail_members_ideal(S, S.small_elements[i]))
            checks.append(
                _eq(
                    "sg_ts_two_paths",
                    ts.values[i - 1],
                    length_between(p_prev, p_cur),
                )
            )
            p_prev = p_cur
        # a small element inside the different forces the next entry to be 1
        for i in range(n):
            if S.small_elements[i] in theta:
                checks.append(
                    _eq("sg_different_member_forces_one", ts.values[i], 1)
                )
    return checks


def _pairs_group(
    S: NumericalSemigroup,
    ideals: list[RelativeIdeal],
    sample_limit: int,
) -> list[Check]:
    r = S.type
    pairs = []
    if len(ideals) <= sample_limit:
        pairs = [
            (I, J)
            for i, I in enumerate(ideals)
            for J in ideals[i + 1 :]
        ]
    else:
        rng = random.Random("pairs:" + S.encode())
        for _ in range(sample_limit):
            pairs.append(tuple(rng.sample(ideals, 2)))
    checks: list[Check] = []
    for X, Y in pairs:
        if Y.is_subset_of(X):
            big, small = X, Y
        elif X.is_subset_of(Y):
            big, small = Y, X
        else:
            continue
        gap = length_between(big, small)
        growth = length_between(dual(small), dual(big))
        a_big, b_big = ab_invariants(S, big)
        a_small, b_small = ab_invariants(S, small)
        checks.append(_le("pair_dual_growth_bound", growth, r * gap))
        checks.append(_le("pair_b_antitone", b_big, b_small))
        checks.append(_le("pair_a_upper", a_small, a_big + (r - 1) * gap))
        checks.append(_le("pair_a_lower", a_big - gap, a_small))
    return checks


def _colon_growth_group(
    S: NumericalSemigroup,
    ideals: list[RelativeIdeal],
    sample_limit: int,
) -> list[Check]:
    if not ideals:
        return []
    rng = random.Random("colon:" + S.encode())
    M = maximal_ideal(S)
    checks: list[Check] = []
    for _ in range(min(sample_limit, len(ideals) ** 2)):
        J = rng.choice(ideals)
        X = rng.choice(ideals)
        Y = rng.choice(ideals)
        inner = ideal_intersection(X, Y)
        outer = ideal_union(X, Y)
        t_j = length_between(colon(J, M), J)
        lhs = length_between(colon(J, inner), colon(J, outer))
        rhs = t_j * length_between(outer, inner)
        checks.append(_le("colon_growth_bound", lhs, rhs))
    return checks


def _classification_group(S: NumericalSemigroup) -> tuple[list[Check], str]:
    r = S.type
    e = S.multiplicity
    b = b_of_tail(S)
    outcome = classify_b(S)
    checks = list(outcome.checks)
    value_pat = matches_small_b_value_pattern(S)
    ts_pat = matches_small_b_ts_pattern(S)
    small_b = 0 <= b < r - 1
    checks.append(
        Check(
            "class_b_lt_value_set",
            small_b == value_pat,
            int(small_b),
            int(value_pat),
        )
    )
    checks.append(
        Check(
            "class_b_lt_type_seq",
            small_b == ts_pat,
            int(small_b),
            int(ts_pat),
        )
    )
    if S.conductor and not S.is_gorenstein:
        if b == r - 1:
            case1 = value_pat or (
                all(
                    S.small_elements[i] == i * e
                    for i in range(len(S.small_elements) - 1)
                )
                and S.conductor == (len(S.small_elements) - 2) * e + 2
            )
            case2 = outcome.tag == TAG_B_EQ_RM1_CASE2 and outcome.passed
            if outcome.tag == TAG_B_EQ_RM1_CASE1:
                case1 = outcome.passed
                case2 = False
            checks.append(
                Check(
                    "class_b_eq_rm1_unique_pattern",
                    int(case1) + int(case2) == 1,
                    int(case1),
                    int(case2),
                )
            )
        if b == r:
            g_case = outcome.tag == TAG_B_EQ_R_G and outcome.passed
            j_case = S in case_j_semigroups()
            checks.append(
                Check(
                    "class_b_eq_r_family",
                    int(g_case) + int(j_case) == 1,
                    int(g_case),
                    int(j_case),
                )
            )
    return checks, outcome.tag


def _run_semigroup(
    S: NumericalSemigroup,
    groups: tuple[str, ...],
    window: int,
    sample_limit: int,
    col: _Collector,
) -> tuple[int, str | None]:
    """Run the requested groups on S; returns (ideal count, class tag)."""
    enc = S.encode()
    need_ideals = any(
        g in groups for g in ("ideals", "pairs", "colon_growth", "equivalences")
    )
    ideals = enumerate_ideals(S, window) if need_ideals else []
    tag = None
    if "semigroup" in groups:
        col.add(enc, "", _semigroup_group(S))
    if "ideals" in groups:
        for E in ideals:
            report = decomposition_check(S, E)
            col.add(enc, E.encode(), report.checks)
    if "pairs" in groups:
        col.add(enc, "", _pairs_group(S, ideals, sample_limit))
    if "colon_growth" in groups:
        col.add(enc, "", _colon_growth_group(S, ideals, sample_limit))
    if "equivalences" in groups:
        col.add(enc, "", ring_classification(S, window, ideals).checks)
    if "overrings" in groups:
        for T in oversemigroups(S):
            if T == S:
                continue
            col.add(enc, T.encode(), overring_check(S, T).checks)
    if "profile" in groups and S.conductor:
        col.add(enc, "", window_profile(S).checks)
    if "classification" in groups:
        checks, tag = _classification_group(S)
        col.add(enc, "", checks)
    return len(ideals), tag


def _filtered(S: NumericalSemigroup, query: CensusQuery) -> bool:
    if query.multiplicity_range is not None:
        lo, hi = query.multiplicity_range
        if not lo <= S.multiplicity <= hi:
            return False
    if query.gorenstein_only and not S.is_gorenstein:
        return False
    if query.non_gorenstein_only and S.is_gorenstein:
        return False
    return True


def _population(query: CensusQuery):
    if query.semigroups is not None:
        for enc in query.semigroups:
            yield NumericalSemigroup.decode(enc)
        return
    yield from enumerate_semigroups(query.max_genus, query.max_conductor)


def _census_serial(query: CensusQuery, population) -> CensusReport:
    groups = query.groups()
    col = _Collector()
    report = CensusReport(query=query.to_dict())
    for S in population:
        if not _filtered(S, query):
            continue
        report.semigroups_per_genus[S.genus] = (
            report.semigroups_per_genus.get(S.genus, 0) + 1
        )
        report.semigroup_count += 1
        n_ideals, tag = _run_semigroup(
            S, groups, query.window, query.sample_limit, col
        )
        report.ideal_count += n_ideals
        if tag is not None:
            report.classification_tallies[tag] = (
                report.classification_tallies.get(tag, 0) + 1
            )
            if tag in _CLASS_TAGS_TRACKED:
                report.classification_members.setdefault(tag, []).append(
                    S.encode()
                )
    report.check_tallies = col.tallies
    report.violations = sorted(col.violations, key=Violation.sort_key)
    for tag in report.classification_members:
        report.classification_members[tag].sort()
    return report


_SPLIT_GENUS = 4


def _worker_run(payload: tuple[str, dict]) -> dict:
    root_enc, qdict = payload
    query = CensusQuery(**qdict)
    root = NumericalSemigroup.decode(root_enc)
    stack = [root]

    def subtree():
        while stack:
            S = stack.pop()
            if query.max_genus is not None and S.genus > query.max_genus:
                continue
            if (
                query.max_conductor is not None
                and S.conductor > query.max_conductor
            ):
                continue
            yield S
            stack.extend(reversed(_children(S)))

    sub = _census_serial(query, subtree())
    return {
        "semigroup_count": sub.semigroup_count,
        "ideal_count": sub.ideal_count,
        "per_genus": sub.semigroups_per_genus,
        "tallies": sub.check_tallies,
        "violations": [v.to_dict() for v in sub.violations],
        "class_tallies": sub.classification_tallies,
        "class_members": sub.classification_members,
    }


def _census_parallel(query: CensusQuery) -> CensusReport:
    """Partition the tree at a fixed genus and merge order-normalized parts."""
    near: list[NumericalSemigroup] = []
    roots: list[NumericalSemigroup] = []
    stack = [NumericalSemigroup(0, 0)]
    while stack:
        S = stack.pop()
        if query.max_genus is not None and S.genus > query.max_genus:
            continue
        if query.max_conductor is not None and S.conductor > query.max_conductor:
            continue
        if S.genus == _SPLIT_GENUS:
            roots.append(S)
            continue
        near.append(S)
        stack.extend(reversed(_children(S)))

    report = _census_serial(query, iter(near))
    qdict = dict(
        max_genus=query.max_genus,
        max_conductor=query.max_conductor,
        semigroups=None,
        window=query.window,
        multiplicity_range=query.multiplicity_range,
        gorenstein_only=query.gorenstein_only,
        non_gorenstein_only=query.non_gorenstein_only,
        checks=query.checks,
        workers=1,
        sample_limit=query.sample_limit,
        allow_large=query.allow_large,
    )
    payloads = [(root.encode(), qdict) for root in roots]
    with ProcessPoolExecutor(max_workers=query.workers) as pool:
        parts = list(pool.map(_worker_run, payloads))
    violations = list(report.violations)
    for part in parts:
        report.semigroup_count += part["semigroup_count"]
        report.ideal_count += part["ideal_count"]
        for g, k in part["per_genus"].items():
            g = int(g)
            report.semigroups_per_genus[g] = (
                report.semigroups_per_genus.get(g, 0) + k
            )
        for cid, k in part["tallies"].items():
            report.check_tallies[cid] = report.check_tallies.get(cid, 0) + k
        violations.extend(Violation(**v) for v in part["violations"])
        for tag, k in part["class_tallies"].items():
            report.classification_tallies[tag] = (
                report.classification_tallies.get(tag, 0) + k
            )
        for tag, encs in part["class_members"].items():
            report.classification_members.setdefault(tag, []).extend(encs)
    report.violations = sorted(violations, key=Violation.sort_key)
    for tag in report.classification_members:
        report.classification_members[tag].sort()
    return report


def verify_theorems(query: CensusQuery) -> CensusReport:
    """Run the requested check groups over the whole queried population."""
    import time

    start = time.perf_counter()
    if query.workers > 1 and query.semigroups is None:
        report = _census_parallel(query)
    else:
        report = _census_serial(query, _population(query))
    report.wall_ms = (time.perf_counter() - start) * 1000.0
    return report


def classification_census(
    max_conductor: int,
    workers: int = 1,
    allow_large: bool = False,
) -> CensusReport:
    """Classify every semigroup with conductor up to the bound."""
    return verify_theorems(
        CensusQuery(
            max_conductor=max_conductor,
            window=0,
            checks=("classification",),
            workers=workers,
            allow_large=allow_large,
        )
    )


@dataclass
class SearchReport:
    query: dict
    semigroup_count: int = 0
    ideal_count: int = 0
    pruned_count: int = 0
    examples: list[tuple[str, str, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "semigroup_count": self.semigroup_count,
            "ideal_count": self.ideal_count,
            "pruned_count": self.pruned_count,
            "examples": [
                {"semigroup": s, "ideal": i, "a": a} for s, i, a in self.examples
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def search_negative_a(query: CensusQuery, prune: bool = True) -> SearchReport:
    """Collect ideals with a < 0 over the queried range.

    The pruned walk skips ideals stable under the canonical product
    (a >= type - 1 >= 0 there) and reflexive ideals with d = 0 (the
    lower bound a >= type - 1 - l(bidual/I) - d degenerates to the same
    floor).  Pruning soundness is re-verified by comparing against the
    unpruned walk in the test suite.
    """
    report = SearchReport(query=query.to_dict())
    for S in _population(query):
        report.semigroup_count += 1
        if not _filtered(S, query):
            continue
        for E in enumerate_ideals(S, query.window):
            report.ideal_count += 1
            if prune:
                if is_omega_stable(E) or (
                    bidual(E) == E and d_invariant(S, E) == 0
                ):
                    report.pruned_count += 1
                    continue
            a, _ = ab_invariants(S, E)
            if a < 0:
                report.examples.append((S.encode(), E.encode(), a))
    report.examples.sort()
    return report
