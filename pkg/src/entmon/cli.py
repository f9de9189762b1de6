"""Command-line interface: analyze, sweep-dicke, stress, partitions.

Exit status: 0 success, 1 a stress run found a bound violation, 2 input
validation failure. JSON output is deterministic (floats rendered with 17
significant digits, fixed key order), so identical invocations produce
byte-identical documents.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import detector, families
from .detector import EPS_DET, DetectionReport, exclusion_report
from .frames import ZeroPolicy
from .statevec import PureState, state_from_json_dict


class InputError(Exception):
    """Invalid user input; reported on stderr with exit status 2."""


# ---------------------------------------------------------------------------
# deterministic JSON rendering


def render_json(obj) -> str:
    """Serialize with floats at 17 significant digits for byte-stable output."""
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite number {value!r}")
        out.append(format(value, ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _emit(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(", ")
            _emit(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _write_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else (_fmt(v) if isinstance(v, float) else v) for v in row])


# ---------------------------------------------------------------------------
# input parsing


def parse_zero_policy(text: str, seed: int) -> ZeroPolicy:
    """Parse canonical | axis=x,y,z | maximize[:samples]."""
    if text == "canonical":
        return ZeroPolicy.canonical()
    if text.startswith("axis="):
        parts = text[len("axis="):].split(",")
        if len(parts) != 3:
            raise InputError(f"axis policy needs three components, got {text!r}")
        try:
            vec = [float(p) for p in parts]
        except ValueError:
            raise InputError(f"axis components must be numbers, got {text!r}") from None
        try:
            return ZeroPolicy.fixed_axis(vec)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if text == "maximize" or text.startswith("maximize:"):
        samples = 64
        if ":" in text:
            try:
                samples = int(text.split(":", 1)[1])
            except ValueError:
                raise InputError(f"bad sample count in {text!r}") from None
        try:
            return ZeroPolicy.maximize(samples=samples, seed=seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError(
        f"unknown zero policy {text!r}; expected canonical, axis=x,y,z, or maximize[:samples]"
    )


def _load_state_file(path: str) -> PureState:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read state file {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"state file {path!r} is not valid JSON: {exc}") from None
    try:
        return state_from_json_dict(obj)
    except ValueError as exc:
        raise InputError(f"state file {path!r}: {exc}") from None


def _resolve_state(args) -> tuple[PureState, str]:
    if args.state is not None:
        return _load_state_file(args.state), args.state
    if args.family is None:
        raise InputError("provide either --state FILE or --family NAME --n N [--e E]")
    if args.n is None:
        raise InputError("--family requires --n")
    name = {"plus": "plus-product"}.get(args.family, args.family)
    try:
        spec = families.FamilySpec(name, args.n, args.e)
        return families.state_for(spec), spec.label()
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# analyze


def _report_csv_row(report: DetectionReport, residual: float | None) -> tuple[list[str], list]:
    header = [
        "n",
        "policy",
        "m_pb",
        "genuine_threshold",
        "genuine_multipartite",
        "entangled_subset_guarantee",
        "not_product_min_k",
        "depth_statement_m",
        "depth_proof_parties",
        "excluded_count",
        "surviving_count",
        "factorization_residual",
    ]
    row = [
        report.n,
        report.policy,
        float(report.m_pb),
        None if report.genuine_threshold is None else float(report.genuine_threshold),
        report.genuine_multipartite,
        report.entangled_subset_guarantee,
        report.not_product_min_k,
        report.depth_statement_m,
        report.depth_proof_parties,
        len(report.excluded_partitions),
        len(report.surviving_partitions),
        None if residual is None else float(residual),
    ]
    return header, row


def _parts_str(parts: tuple[int, ...]) -> str:
    return "(" + "+".join(str(r) for r in parts) + ")"


def _report_text(report: DetectionReport, source: str, residual: float | None) -> list[str]:
    lines = [
        f"state: {source}",
        f"qubits: {report.n}",
        f"zero-axis policy: {report.policy}",
        f"M^(pb) = {_fmt(report.m_pb)}",
        "",
    ]
    if report.n == 2:
        lines.append("note: k-product / depth thresholds require n >= 3; reporting the")
        lines.append("      global pair bound and the factorization residual only.")
        lines.append(f"pair bound: 2   value {_fmt(report.m_pb)}   "
                     + ("within bound" if report.m_pb <= 2 + EPS_DET else "EXCEEDED (bug)"))
        if residual is not None:
            verdict = "consistent with a product pair" if residual <= 1e-9 else "pair is not product"
            lines.append(f"factorization residual: {_fmt(residual)}   ({verdict})")
    else:
        lines.append("k-product thresholds (value > threshold => not k-product):")
        for k, s in sorted(report.s_thresholds.items()):
            mark = "exceeded" if report.m_pb > s + EPS_DET else "not exceeded"
            lines.append(f"  s_{k} = {_fmt(s)}   {mark}")
        gt = report.genuine_threshold
        mark = "exceeded" if report.genuine_multipartite else "not exceeded"
        lines.append(f"genuine-multipartite threshold: {_fmt(gt)}   {mark}")
        if report.genuine_multipartite:
            lines.append(f"  => genuinely {report.n}-partite entangled")
        if report.depth_thresholds:
            lines.append("depth thresholds (bipartition family):")
            for m, t in sorted(report.depth_thresholds.items()):
                mark = "exceeded" if report.m_pb > t + EPS_DET else "not exceeded"
                lines.append(f"  m={m}: {_fmt(t)}   {mark}")
            if report.depth_statement_m is not None:
                lines.append(
                    f"  depth figure as stated: genuinely {report.depth_statement_m}-partite entangled"
                )
                lines.append(
                    f"  depth figure via bipartition ordering: >= {report.depth_proof_parties} "
                    "mutually entangled parties"
                )
    lines.append("")
    lines.append(
        f"partitions: {len(report.excluded_partitions)} excluded, "
        f"{len(report.surviving_partitions)} surviving"
    )
    lines.append("surviving: " + " ".join(_parts_str(p) for p in report.surviving_partitions))
    if report.not_product_min_k is not None:
        lines.append(f"not k-product for any k >= {report.not_product_min_k}")
    lines.append(
        f"entangled-subset guarantee (partition enumeration): >= {report.entangled_subset_guarantee}"
    )
    return lines


def cmd_analyze(args) -> int:
    state, source = _resolve_state(args)
    policy = parse_zero_policy(args.zero_policy, args.seed)
    report = exclusion_report(state, policy)
    residual = detector.factorization_residual(state, 0, 1) if state.n == 2 else None
    if args.format == "json":
        print(render_json(report.to_json_dict()))
    elif args.format == "csv":
        header, row = _report_csv_row(report, residual)
        _write_csv(header, [row])
    else:
        print("\n".join(_report_text(report, source, residual)))
    return 0


# ---------------------------------------------------------------------------
# sweep-dicke


def cmd_sweep_dicke(args) -> int:
    if args.n_max > 15 or args.n_max < 2:
        raise InputError(f"--n-max must be in 2..15, got {args.n_max}")
    rows = []
    for n in range(2, args.n_max + 1):
        in_domain = families.dicke_formula_stated_domain(n)
        for e in range(n + 1):
            report = exclusion_report(
                families.state_for(families.FamilySpec("dicke", n, e)), ZeroPolicy.canonical()
            )
            formula = families.dicke_m_pb(n, e)
            claimed = (
                families.dicke_claimed_depth(n) if in_domain and n >= 3 and e == (n - 1) // 2 else None
            )
            rows.append(
                {
                    "n": n,
                    "e": e,
                    "m_pb_numeric": report.m_pb,
                    "m_pb_formula": formula,
                    "abs_diff": abs(report.m_pb - formula),
                    "formula_stated_domain": in_domain,
                    "genuine_multipartite": report.genuine_multipartite,
                    "entangled_subset_guarantee": report.entangled_subset_guarantee,
                    "balanced_depth_claim": claimed,
                }
            )
    if args.format == "json":
        print(render_json({"n_max": args.n_max, "policy": "canonical", "rows": rows}))
    elif args.format == "csv":
        header = list(rows[0].keys())
        _write_csv(header, [[r[h] for h in header] for r in rows])
    else:
        print("n  e   m_pb(numeric)        m_pb(formula)        |diff|    stated-domain genuine subset")
        for r in rows:
            print(
                f"{r['n']:<2} {r['e']:<3} {r['m_pb_numeric']:<20.15g} "
                f"{r['m_pb_formula']:<20.15g} {r['abs_diff']:<9.2e} "
                f"{str(r['formula_stated_domain']):<13} {str(r['genuine_multipartite']):<7} "
                f">={r['entangled_subset_guarantee']}"
                + (f"  balanced-depth-claim={r['balanced_depth_claim']}"
                   if r["balanced_depth_claim"] is not None else "")
            )
    return 0


# ---------------------------------------------------------------------------
# stress


def cmd_stress(args) -> int:
    if not 2 <= args.n <= 10:
        raise InputError(f"--n must be in 2..10, got {args.n}")
    if args.trials < 1:
        raise InputError(f"--trials must be >= 1, got {args.trials}")
    summary = detector.monogamy_stress(args.n, args.trials, args.seed)
    fams = [
        ("pair", 2.0, summary.min_pair_slack),
        ("two_term", 2.0, summary.min_two_term_slack),
        ("triple", 3.0, summary.min_triple_slack),
        ("total", 2.0 if args.n == 2 else float(math.comb(args.n, 2)), summary.min_total_slack),
    ]
    if args.format == "json":
        doc = {
            "n": summary.n,
            "trials": summary.trials,
            "seed": summary.seed,
            "families": {
                name: {"bound": bound, "min_slack": None if math.isinf(s) else s}
                for name, bound, s in fams
            },
            "max_pair_value": summary.max_pair_value,
            "violations": summary.violations,
        }
        print(render_json(doc))
    elif args.format == "csv":
        header = ["family", "bound", "min_slack", "violations"]
        rows = [
            [name, bound, None if math.isinf(s) else s, summary.violations] for name, bound, s in fams
        ]
        _write_csv(header, rows)
    else:
        print(f"monogamy stress: n={summary.n} trials={summary.trials} seed={summary.seed}")
        for name, bound, s in fams:
            slack = "n/a" if math.isinf(s) else _fmt(s)
            print(f"  {name:<9} bound {bound:g}   min slack {slack}")
        print(f"  max pairwise value observed: {_fmt(summary.max_pair_value)}")
        print(f"  violations beyond -1e-9: {summary.violations}")
    return 1 if summary.violations else 0


# ---------------------------------------------------------------------------
# partitions


def cmd_partitions(args) -> int:
    if not 2 <= args.n <= 20:
        raise InputError(f"--n must be in 2..20, got {args.n}")
    n, value = args.n, args.m_value
    table = []
    for parts in detector.enumerate_partitions(n):
        bound = detector.partition_bound(parts)
        excluded = len(parts) > 1 and value > bound + EPS_DET
        table.append({"parts": list(parts), "k": len(parts), "bound": bound, "excluded": excluded})
    s_thr = {k: detector.s_threshold(n, k) for k in range(2, n)} if n >= 3 else {}
    gt = detector.genuine_threshold(n) if n >= 3 else None
    depth = {m: detector.depth_threshold(n, m) for m in range(1, n // 2)} if n >= 5 else {}
    if args.format == "json":
        doc = {
            "n": n,
            "m_value": value,
            "partitions": table,
            "s_thresholds": {str(k): v for k, v in sorted(s_thr.items())},
            "genuine_threshold": gt,
            "depth_thresholds": {str(m): v for m, v in sorted(depth.items())},
        }
        print(render_json(doc))
    elif args.format == "csv":
        header = ["kind", "parts", "k_or_m", "bound", "verdict"]
        rows: list[list] = [
            [
                "partition",
                "+".join(str(r) for r in row["parts"]),
                row["k"],
                float(row["bound"]),
                "excluded" if row["excluded"] else "survives",
            ]
            for row in table
        ]
        for k, s in sorted(s_thr.items()):
            rows.append(["s_threshold", "", k, float(s), "exceeded" if value > s + EPS_DET else ""])
        if gt is not None:
            rows.append(
                ["genuine_threshold", "", "", float(gt), "exceeded" if value > gt + EPS_DET else ""]
            )
        for m, t in sorted(depth.items()):
            rows.append(
                ["depth_threshold", "", m, float(t), "exceeded" if value > t + EPS_DET else ""]
            )
        _write_csv(header, rows)
    else:
        print(f"partitions of n={n} against value {_fmt(value)}:")
        for row in table:
            verdict = "excluded" if row["excluded"] else "survives"
            print(f"  {_parts_str(tuple(row['parts'])):<24} bound {row['bound']:<6g} {verdict}")
        if s_thr:
            print("k-product thresholds: " + "  ".join(f"s_{k}={v:g}" for k, v in sorted(s_thr.items())))
        if gt is not None:
            print(f"genuine-multipartite threshold: {gt:g}")
        if depth:
            print("depth thresholds: " + "  ".join(f"m={m}:{v:g}" for m, v in sorted(depth.items())))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entmon",
        description="Detect multipartite entanglement of pure qubit states from "
        "two-qubit correlations and monogamy bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full detection report for one state")
    p.add_argument("--state", help="path to a state JSON file")
    p.add_argument("--family", choices=["dicke", "ghz", "w", "plus", "plus-product"])
    p.add_argument("--n", type=int, help="qubit count for --family")
    p.add_argument("--e", type=int, help="excitation count (dicke family)")
    p.add_argument("--zero-policy", default="canonical",
                   help="canonical | axis=x,y,z | maximize[:samples]")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for the maximize policy")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep-dicke", help="numeric vs closed-form table for excitation families")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=cmd_sweep_dicke)

    p = sub.add_parser("stress", help="monogamy bounds on random states in random frames")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("partitions", help="partition bounds and thresholds for a given value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-value", type=float, required=True)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=cmd_partitions)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
