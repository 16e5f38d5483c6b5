"""Command-line interface.

Subcommands::

    typeseq info       --gens 3,4,5
    typeseq ideal      --gens 14,21,23 --ideal 38,44,50
    typeseq overrings  --gens 3,4,5
    typeseq census     --max-genus 8 --window 2 --checks all
    typeseq classify   --max-conductor 30
    typeseq search     --negative-a --max-genus 8 --window 2

Semigroups are given either by generators (``--gens``) or by the members
below the conductor (``--elements ... --conductor N``).  Ideals are given
by generators (comma list) or in ``min|members|conductor`` form.

Output is deterministic: fixed key order, no timestamps or timings, so
identical runs produce identical bytes.  Exit status is 0 when every
reported check passed, 1 when any check failed, and 2 for usage or
domain errors (reported as a JSON object with an ``error`` key).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .census import (
    CensusQuery,
    classification_census,
    search_negative_a,
    verify_theorems,
)
from .classification import classify_b, window_profile
from .errors import TypeseqError
from .ideals import RelativeIdeal, ideal_from_generators, tail_ideal
from .invariants import (
    ab_invariants,
    d_invariant,
    decomposition_check,
    overring_check,
    sigma,
    type_sequence,
)
from .semigroup import NumericalSemigroup, from_generators, from_small_elements, oversemigroups


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise TypeseqError(f"expected a comma-separated integer list: {text!r}") from exc


def _semigroup_from_args(args) -> NumericalSemigroup:
    if args.gens is not None:
        if args.elements is not None or args.conductor is not None:
            raise TypeseqError("--gens conflicts with --elements/--conductor")
        return from_generators(_parse_int_list(args.gens))
    if args.elements is not None:
        if args.conductor is None:
            raise TypeseqError("--elements needs --conductor")
        return from_small_elements(_parse_int_list(args.elements), args.conductor)
    raise TypeseqError("a semigroup is required: --gens or --elements/--conductor")


def _ideal_from_arg(S: NumericalSemigroup, text: str) -> RelativeIdeal:
    if "|" in text:
        return RelativeIdeal.decode(S, text)
    return ideal_from_generators(S, _parse_int_list(text))


def _check_rows(checks) -> list[dict]:
    return [
        {"id": c.id, "pass": c.passed, "lhs": c.lhs, "rhs": c.rhs}
        for c in checks
    ]


def _semigroup_payload(S: NumericalSemigroup) -> dict:
    return {
        "generators": list(S.minimal_generators),
        "small_elements": list(S.small_elements),
        "conductor": S.conductor,
        "genus": S.genus,
        "multiplicity": S.multiplicity,
        "type": S.type,
    }


def _classification_payload(S: NumericalSemigroup) -> dict:
    outcome = classify_b(S)
    return {"tag": outcome.tag, "parameters": dict(outcome.parameters)}


def _report_payload(S, ts_values, a, b, d, checks) -> dict:
    return {
        "semigroup": _semigroup_payload(S),
        "type_sequence": list(ts_values),
        "invariants": {"a": a, "b": b, "d": d, "sigma": sigma(S)},
        "classification": _classification_payload(S),
        "checks": _check_rows(checks),
    }


# -- subcommand payload builders ------------------------------------------------


def _cmd_info(args) -> dict:
    S = _semigroup_from_args(args)
    ts = type_sequence(S)
    checks = list(classify_b(S).checks)
    if S.conductor:
        gamma = tail_ideal(S, S.conductor)
        a, b = ab_invariants(S, gamma)
        d = d_invariant(S, gamma)
        checks.extend(window_profile(S).checks)
    else:
        a = b = d = 0
    return _report_payload(S, ts.values, a, b, d, checks)


def _cmd_ideal(args) -> dict:
    S = _semigroup_from_args(args)
    I = _ideal_from_arg(S, args.ideal)
    report = decomposition_check(S, I)
    payload = _report_payload(
        S,
        type_sequence(S).values,
        report.a,
        report.b,
        report.d,
        report.checks,
    )
    payload["ideal"] = {
        "encoding": I.encode(),
        "min_element": I.min_element,
        "conductor": I.conductor,
        "reflexive": report.reflexive,
        "integrally_closed": report.integrally_closed,
        "omega_stable": report.omega_stable,
        "principal": report.principal,
    }
    return payload


def _cmd_overrings(args) -> dict:
    S = _semigroup_from_args(args)
    rows = []
    for T in oversemigroups(S):
        if T == S:
            continue
        rep = overring_check(S, T)
        rows.append(
            {
                "overring": T.encode(),
                "genus": T.genus,
                "length": rep.length,
                "checks": _check_rows(rep.checks),
            }
        )
    return {"semigroup": _semigroup_payload(S), "overrings": rows}


def _cmd_census(args) -> dict:
    query = CensusQuery(
        max_genus=args.max_genus,
        max_conductor=args.max_conductor,
        window=args.window,
        checks=tuple(args.checks.split(",")),
        workers=args.workers,
        sample_limit=args.sample_limit,
        allow_large=args.allow_large,
        gorenstein_only=args.gorenstein_only,
        non_gorenstein_only=args.non_gorenstein_only,
    )
    return verify_theorems(query).to_dict()


def _cmd_classify(args) -> dict:
    if args.max_conductor is not None:
        return classification_census(
            args.max_conductor, workers=args.workers, allow_large=args.allow_large
        ).to_dict()
    S = _semigroup_from_args(args)
    outcome = classify_b(S)
    return {
        "semigroup": _semigroup_payload(S),
        "classification": {
            "tag": outcome.tag,
            "parameters": dict(outcome.parameters),
        },
        "checks": _check_rows(outcome.checks),
    }


def _cmd_search(args) -> dict:
    query = CensusQuery(
        max_genus=args.max_genus,
        max_conductor=args.max_conductor,
        window=args.window,
        workers=args.workers,
        allow_large=args.allow_large,
    )
    return search_negative_a(query, prune=not args.no_prune).to_dict()


# -- rendering -------------------------------------------------------------------


def _all_checks_pass(payload: dict) -> bool:
    if "passed" in payload:
        return bool(payload["passed"])
    ok = True
    for row in payload.get("checks", []):
        ok = ok and row["pass"]
    for over in payload.get("overrings", []):
        for row in over["checks"]:
            ok = ok and row["pass"]
    return ok


def _render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _render_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "violations" in payload:
        writer.writerow(
            ["semigroup_encoding", "ideal_encoding", "check_id", "lhs", "rhs"]
        )
        for v in payload["violations"]:
            writer.writerow(
                [v["semigroup"], v["ideal"], v["check_id"], v["lhs"], v["rhs"]]
            )
    elif "examples" in payload:
        writer.writerow(["semigroup_encoding", "ideal_encoding", "a"])
        for ex in payload["examples"]:
            writer.writerow([ex["semigroup"], ex["ideal"], ex["a"]])
    elif "overrings" in payload:
        writer.writerow(["overring", "check_id", "pass", "lhs", "rhs"])
        for over in payload["overrings"]:
            for row in over["checks"]:
                writer.writerow(
                    [over["overring"], row["id"], int(row["pass"]), row["lhs"], row["rhs"]]
                )
    else:
        writer.writerow(["check_id", "pass", "lhs", "rhs"])
        for row in payload.get("checks", []):
            writer.writerow([row["id"], int(row["pass"]), row["lhs"], row["rhs"]])
    return buf.getvalue()


def _render_human(payload: dict) -> str:
    lines: list[str] = []
    sg = payload.get("semigroup")
    if sg:
        lines.append(
            "semigroup <%s>  conductor=%d genus=%d mult=%d type=%d"
            % (
                ",".join(str(g) for g in sg["generators"]),
                sg["conductor"],
                sg["genus"],
                sg["multiplicity"],
                sg["type"],
            )
        )
    if "type_sequence" in payload:
        lines.append(
            "type sequence: (%s)"
            % ", ".join(str(v) for v in payload["type_sequence"])
        )
    if "invariants" in payload:
        inv = payload["invariants"]
        lines.append(
            "a=%d b=%d d=%d sigma=%d" % (inv["a"], inv["b"], inv["d"], inv["sigma"])
        )
    if "ideal" in payload:
        ideal = payload["ideal"]
        flags = [
            k
            for k in ("reflexive", "integrally_closed", "omega_stable", "principal")
            if ideal[k]
        ]
        lines.append("ideal %s  [%s]" % (ideal["encoding"], ", ".join(flags)))
    if "classification" in payload:
        cls = payload["classification"]
        lines.append(
            "classification: %s %s" % (cls["tag"], cls["parameters"] or "")
        )
    if "overrings" in payload:
        for over in payload["overrings"]:
            bad = [r for r in over["checks"] if not r["pass"]]
            lines.append(
                "overring %s genus=%d length=%d checks=%d failed=%d"
                % (
                    over["overring"],
                    over["genus"],
                    over["length"],
                    len(over["checks"]),
                    len(bad),
                )
            )
    if "semigroup_count" in payload:
        lines.append("semigroups: %d" % payload["semigroup_count"])
        if "ideal_count" in payload:
            lines.append("ideals: %d" % payload["ideal_count"])
        if "classification_tallies" in payload and payload["classification_tallies"]:
            for tag in sorted(payload["classification_tallies"]):
                lines.append(
                    "  %s: %d" % (tag, payload["classification_tallies"][tag])
                )
        if "violations" in payload:
            lines.append("violations: %d" % len(payload["violations"]))
            for v in payload["violations"][:50]:
                lines.append(
                    "  %s %s %s lhs=%d rhs=%d"
                    % (v["semigroup"], v["ideal"], v["check_id"], v["lhs"], v["rhs"])
                )
        if "examples" in payload:
            lines.append("examples with a < 0: %d" % len(payload["examples"]))
            for ex in payload["examples"][:50]:
                lines.append(
                    "  %s %s a=%d" % (ex["semigroup"], ex["ideal"], ex["a"])
                )
    if "checks" in payload:
        bad = [r for r in payload["checks"] if not r["pass"]]
        lines.append(
            "checks: %d run, %d failed" % (len(payload["checks"]), len(bad))
        )
        for row in bad:
            lines.append(
                "  FAIL %s lhs=%d rhs=%d" % (row["id"], row["lhs"], row["rhs"])
            )
    return "\n".join(lines) + "\n"


def _add_semigroup_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gens", help="comma-separated generators, e.g. 3,4,5")
    p.add_argument(
        "--elements", help="comma-separated members below the conductor"
    )
    p.add_argument("--conductor", type=int, help="conductor for --elements")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("human", "json", "csv"),
        default="human",
        dest="fmt",
    )
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_range_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-genus", type=int, default=None)
    p.add_argument("--max-conductor", type=int, default=None)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="typeseq",
        description="Type sequences and duality invariants of numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariants and type sequence of a semigroup")
    _add_semigroup_args(p)
    _add_output_args(p)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("ideal", help="a, b, d and all checks for one ideal")
    _add_semigroup_args(p)
    p.add_argument(
        "--ideal",
        required=True,
        help="ideal generators 'g1,g2,...' or encoding 'min|members|conductor'",
    )
    _add_output_args(p)
    p.set_defaults(fn=_cmd_ideal)

    p = sub.add_parser("overrings", help="length identities over all oversemigroups")
    _add_semigroup_args(p)
    _add_output_args(p)
    p.set_defaults(fn=_cmd_overrings)

    p = sub.add_parser("census", help="verify check groups over a range")
    _add_range_args(p)
    p.add_argument(
        "--checks",
        default="all",
        help="comma list of groups: semigroup,ideals,pairs,colon_growth,"
        "equivalences,overrings,profile,classification or 'all'",
    )
    p.add_argument("--sample-limit", type=int, default=64)
    p.add_argument("--gorenstein-only", action="store_true")
    p.add_argument("--non-gorenstein-only", action="store_true")
    _add_output_args(p)
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser(
        "classify", help="small-b classification of one semigroup or a range"
    )
    _add_semigroup_args(p)
    p.add_argument("--max-conductor", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    _add_output_args(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("search", help="scan for ideals with negative a")
    p.add_argument("--negative-a", action="store_true", required=True)
    p.add_argument("--no-prune", action="store_true")
    _add_range_args(p)
    _add_output_args(p)
    p.set_defaults(fn=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except TypeseqError as exc:
        error = {"error": {"code": exc.code, "message": str(exc)}}
        sys.stdout.write(json.dumps(error, sort_keys=True) + "\n")
        return 2
    except ValueError as exc:
        error = {"error": {"code": "ValueError", "message": str(exc)}}
        sys.stdout.write(json.dumps(error, sort_keys=True) + "\n")
        return 2
    if args.fmt == "json":
        text = _render_json(payload)
    elif args.fmt == "csv":
        text = _render_csv(payload)
    else:
        text = _render_human(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if _all_checks_pass(payload) else 1


if __name__ == "__main__":
    sys.exit(main())
