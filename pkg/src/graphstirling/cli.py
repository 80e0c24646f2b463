"""Command-line front end.

Every subcommand prints one machine-readable record to standard output
(JSON by default, CSV on request) and a short human summary to standard
error.  Exact integers are rendered as decimal strings so nothing is
ever squeezed through a float; CSV floats carry 17 significant digits.

Exit codes: 0 success, 2 usage error, 3 invalid parameters, 4 internal
verification failure (an oracle mismatch, a broken exactness check),
5 malformed Bell cache file.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field

from .asymptotics import (
    bell_ratio_deviation,
    estimate_report,
    harper_variance_deviation,
    normality_report,
)
from .combinatorics import BellSequence, bell, default_bells, ratio_to_float
from .errors import CacheFormatError, VerificationError
from .families import (
    Cycle,
    Forest,
    GraphFamily,
    chi,
    empty_graph,
    graph_bell,
    label,
    moments,
    path,
    stirling_polynomial,
    stirling_vector,
)
from .oracle import (
    build_cycle,
    build_empty,
    build_random_forest,
    build_star_forest,
    enumerate_partition_counts,
    singleton_free_count,
)
from .realroots import (
    count_real_roots,
    isolate_negative_roots,
    ultra_log_concave,
    verify_interlacing_relations,
)

_CACHE_HEADER = "BELLCACHE v1"
_CACHE_DIGITS = re.compile(r"0|[1-9][0-9]*")
_RANDOM_SEEDS = (1, 2, 3)


# ---------------------------------------------------------------------------
# Bell cache persistence


def load_bell_cache(cache_path: str) -> BellSequence:
    """Parse and validate a Bell cache file.

    Any deviation from the format, or a sampled recurrence violation,
    raises CacheFormatError carrying the offending line number.
    """
    raw = open(cache_path, "r").read()
    if not raw.endswith("\n"):
        raise CacheFormatError(max(raw.count("\n") + 1, 1), "missing final newline")
    lines = raw.split("\n")[:-1]
    if not lines or lines[0] != _CACHE_HEADER:
        raise CacheFormatError(1, f"header must be exactly {_CACHE_HEADER!r}")
    values: list[int] = []
    for lineno, text in enumerate(lines[1:], start=2):
        if not _CACHE_DIGITS.fullmatch(text):
            raise CacheFormatError(lineno, f"not a bare decimal integer: {text!r}")
        values.append(int(text))
    if not values:
        return BellSequence()
    # the recurrence B_j = sum C(j-1,i) B_i, spot-checked on the small
    # prefix and the last entry; a full check would be quadratic
    sampled = set(range(min(len(values), 17)))
    sampled.add(len(values) - 1)
    for j in sorted(sampled):
        expected = (
            1 if j == 0 else sum(math.comb(j - 1, i) * values[i] for i in range(j))
        )
        if values[j] != expected:
            raise CacheFormatError(j + 2, "Bell recurrence violated")
    return BellSequence(values)


def save_bell_cache(cache_path: str, seq: BellSequence) -> None:
    with open(cache_path, "w") as fh:
        fh.write("\n".join([_CACHE_HEADER] + [str(v) for v in seq.known()]) + "\n")


# ---------------------------------------------------------------------------
# shared plumbing


@dataclass
class CommandResult:
    command: str
    parameters: dict
    payload: dict
    csv_header: list
    csv_rows: list
    summary: str
    exit_code: int = 0
    plot_files: list = field(default_factory=list)


def _select_graph(args: argparse.Namespace) -> GraphFamily:
    if args.forest is not None:
        n, c = args.forest
        return Forest(n, c)
    if args.cycle is not None:
        return Cycle(args.cycle)
    if args.empty is not None:
        return empty_graph(args.empty)
    return path(args.path)


def _graph_parameters(args: argparse.Namespace, g: GraphFamily) -> dict:
    if args.forest is not None:
        params: dict = {"family": "forest", "n": g.n, "c": g.c}
    elif args.cycle is not None:
        params = {"family": "cycle", "n": g.n}
    elif args.empty is not None:
        params = {"family": "empty", "n": g.n}
    else:
        params = {"family": "path", "n": g.n}
    params["label"] = label(g)
    return params


def _finite(x: float) -> float | None:
    """Floats destined for JSON; NaN and infinities become null."""
    return x if math.isfinite(x) else None


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _spans_json(spans) -> list[list[str]]:
    return [[str(lo), str(hi)] for lo, hi in spans]


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_table(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    counts = stirling_vector(g).counts
    ks = [k for k, a in enumerate(counts) if a]
    rows = [{"k": k, "count": str(counts[k])} for k in ks]
    result = CommandResult(
        command="table",
        parameters=_graph_parameters(args, g),
        payload={"rows": rows},
        csv_header=["k", "count"],
        csv_rows=[[k, str(counts[k])] for k in ks],
        summary=(
            f"{label(g)}: {len(ks)} nonzero counts, "
            f"graph Bell number {sum(counts)}"
        ),
    )
    if args.plot_dir:
        from .plots import render_counts

        result.plot_files = render_counts(
            args.plot_dir, label(g), ks, [counts[k] for k in ks]
        )
    return result


def cmd_poly(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    p = stirling_polynomial(g)
    coeffs = [str(c) for c in p.coeffs]
    return CommandResult(
        command="poly",
        parameters=_graph_parameters(args, g),
        payload={"degree": p.degree, "coefficients": coeffs},
        csv_header=["power", "coefficient"],
        csv_rows=[[i, c] for i, c in enumerate(coeffs)],
        summary=f"{label(g)}: degree {p.degree}, vanishes to order {chi(g)} at 0",
    )


def cmd_roots(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    p = stirling_polynomial(g)
    total = count_real_roots(p)
    iso = isolate_negative_roots(p)
    intervals = [{"lo": str(lo), "hi": str(hi)} for lo, hi in iso.intervals]
    base = [total, p.degree, iso.zero_multiplicity, iso.positive_root_count]
    csv_rows = [
        base + [i, str(lo), str(hi)] for i, (lo, hi) in enumerate(iso.intervals)
    ] or [base + [None, None, None]]
    return CommandResult(
        command="roots",
        parameters=_graph_parameters(args, g),
        payload={
            "degree": p.degree,
            "count_real_roots": total,
            "zero_multiplicity": iso.zero_multiplicity,
            "positive_root_count": iso.positive_root_count,
            "negative_intervals": intervals,
        },
        csv_header=[
            "count_real_roots",
            "degree",
            "zero_multiplicity",
            "positive_root_count",
            "interval_index",
            "lo",
            "hi",
        ],
        csv_rows=csv_rows,
        summary=(
            f"{label(g)}: {total} real roots of degree {p.degree}; "
            f"multiplicity {iso.zero_multiplicity} at 0, "
            f"{len(iso.intervals)} isolated negative"
        ),
    )


def cmd_interlace(args: argparse.Namespace) -> CommandResult:
    verdicts = verify_interlacing_relations(args.c, args.n)
    relations = []
    csv_rows = []
    held = applicable = 0
    for idx, v in enumerate(verdicts, start=1):
        if v is None:
            relations.append({"relation": idx, "applicable": False})
            csv_rows.append([idx, False, None, None])
            continue
        applicable += 1
        held += v.holds
        relations.append(
            {
                "relation": idx,
                "applicable": True,
                "holds": v.holds,
                "failure_reason": v.failure_reason,
                "f_intervals": _spans_json(v.f_intervals),
                "g_intervals": _spans_json(v.g_intervals),
            }
        )
        csv_rows.append([idx, True, v.holds, v.failure_reason])
    return CommandResult(
        command="interlace",
        parameters={"c": args.c, "n": args.n},
        payload={"relations": relations},
        csv_header=["relation", "applicable", "holds", "failure_reason"],
        csv_rows=csv_rows,
        summary=(
            f"forest shapes (c={args.c}, n={args.n}): "
            f"{held} of {applicable} applicable relations hold"
        ),
    )


def cmd_ulc(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    counts = stirling_vector(g).counts
    strict_from = chi(g)
    report = ultra_log_concave(counts, strict_from)
    verdict = "holds" if report.holds else f"fails at k={report.first_violation}"
    return CommandResult(
        command="ulc",
        parameters=_graph_parameters(args, g),
        payload={
            "length": report.length,
            "strict_from": report.strict_from,
            "holds": report.holds,
            "first_violation": report.first_violation,
        },
        csv_header=["length", "strict_from", "holds", "first_violation"],
        csv_rows=[
            [report.length, report.strict_from, report.holds, report.first_violation]
        ],
        summary=f"{label(g)}: ultra log-concavity {verdict} (strict from {strict_from})",
    )


def cmd_moments(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    rep = moments(g)
    payload = {
        "mean_exact": str(rep.mean_exact),
        "variance_exact": str(rep.variance_exact),
        "mean_formula": str(rep.mean_formula),
        "variance_formula": str(rep.variance_formula),
        "mean_float": rep.mean_float,
        "variance_float": rep.variance_float,
        "mean_estimate": _finite(rep.mean_estimate),
        "variance_estimate": _finite(rep.variance_estimate),
        "routes_agree": rep.mean_exact == rep.mean_formula
        and rep.variance_exact == rep.variance_formula,
    }
    return CommandResult(
        command="moments",
        parameters=_graph_parameters(args, g),
        payload=payload,
        csv_header=list(payload),
        csv_rows=[list(payload.values())],
        summary=(
            f"{label(g)}: mean {rep.mean_float:.6g}, "
            f"variance {rep.variance_float:.6g}"
        ),
    )


def cmd_normality(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    rep = normality_report(g)
    payload = {
        "mean": rep.mean,
        "std_dev": rep.std_dev,
        "kolmogorov_distance": rep.kolmogorov_distance,
        "local_limit_sup": rep.local_limit_sup,
        "berry_esseen_product": rep.berry_esseen_product,
    }
    result = CommandResult(
        command="normality",
        parameters=_graph_parameters(args, g),
        payload=payload,
        csv_header=list(payload),
        csv_rows=[list(payload.values())],
        summary=(
            f"{label(g)}: Kolmogorov distance {rep.kolmogorov_distance:.4g}, "
            f"local limit sup {rep.local_limit_sup:.4g}"
        ),
    )
    if args.plot_dir:
        from .plots import render_distribution

        counts = stirling_vector(g).counts
        total = sum(counts)
        ks = [k for k, a in enumerate(counts) if a]
        probs = [ratio_to_float(counts[k], total) for k in ks]
        result.plot_files = render_distribution(
            args.plot_dir, label(g), ks, probs, rep.mean, rep.std_dev
        )
    return result


def cmd_estimates(args: argparse.Namespace) -> CommandResult:
    g = _select_graph(args)
    rep = estimate_report(g)
    n = rep.n
    payload = {
        "n": n,
        "w": rep.w,
        "mean_exact_float": rep.mean_exact_float,
        "var_exact_float": rep.var_exact_float,
        "mean_estimate": rep.mean_estimate,
        "var_estimate": rep.var_estimate,
        "mean_abs_error_times_logn": rep.mean_abs_error_times_logn,
        "var_abs_error_times_logn_over_c2": rep.var_abs_error_times_logn_over_c2,
        "bell_ratio_deviation": bell_ratio_deviation(n) if n >= 2 else None,
        "harper_variance_deviation": harper_variance_deviation(n) if n >= 2 else None,
    }
    return CommandResult(
        command="estimates",
        parameters=_graph_parameters(args, g),
        payload=payload,
        csv_header=list(payload),
        csv_rows=[list(payload.values())],
        summary=(
            f"{label(g)}: W({n}) = {rep.w:.6g}, "
            f"scaled mean error {rep.mean_abs_error_times_logn:.4g}"
        ),
    )


def cmd_oracle_check(args: argparse.Namespace) -> CommandResult:
    max_n = args.max_n
    if not 1 <= max_n <= 12:
        raise ValueError("--max-n must be between 1 and 12")
    failures: list[str] = []
    checks = []

    cases = 0
    for n in range(1, max_n + 1):
        for c in range(1, n + 1):
            expected = stirling_vector(Forest(n, c)).counts
            variants = [("star", build_star_forest(n, c))]
            variants += [
                (f"seed{s}", build_random_forest(n, c, s)) for s in _RANDOM_SEEDS
            ]
            for tag, graph in variants:
                cases += 1
                if enumerate_partition_counts(graph).counts != expected:
                    failures.append(f"forest n={n} c={c} ({tag})")
    checks.append(("forest-vectors", cases))

    cases = 0
    for n in range(2, max_n + 2):
        cases += 1
        if (
            enumerate_partition_counts(build_cycle(n)).counts
            != stirling_vector(Cycle(n)).counts
        ):
            failures.append(f"cycle n={n}")
    checks.append(("cycle-vectors", cases))

    cases = 0
    for n in range(2, max_n + 2):
        cases += 1
        if singleton_free_count(n) != graph_bell(Cycle(n)):
            failures.append(f"singleton-free n={n}")
    checks.append(("singleton-free", cases))

    cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        if sum(enumerate_partition_counts(build_empty(n)).counts) != bell(n):
            failures.append(f"empty-total n={n}")
    checks.append(("empty-totals", cases))

    total = sum(cases for _, cases in checks)
    ok = not failures
    return CommandResult(
        command="oracle-check",
        parameters={"max_n": max_n},
        payload={
            "checks": [{"check": name, "cases": cases} for name, cases in checks],
            "failures": failures,
            "all_match": ok,
        },
        csv_header=["check", "cases", "status"],
        csv_rows=[
            [name, cases, "ok" if ok else "see failures"] for name, cases in checks
        ],
        summary=(
            f"oracle-check: {total} comparisons, "
            + ("all match" if ok else f"{len(failures)} MISMATCHES")
        ),
        exit_code=0 if ok else 4,
    )


def cmd_bell(args: argparse.Namespace) -> CommandResult:
    graph_given = any(
        getattr(args, name) is not None for name in ("forest", "cycle", "empty", "path")
    )
    if graph_given == (args.n is not None):
        raise ValueError("give either --n or exactly one graph flag")
    if args.n is not None:
        if args.n < 0:
            raise ValueError("--n must be non-negative")
        value = bell(args.n)
        parameters: dict = {"n": args.n}
        name = f"B_{args.n}"
    else:
        g = _select_graph(args)
        value = graph_bell(g)
        parameters = _graph_parameters(args, g)
        name = f"graph Bell number of {label(g)}"
    return CommandResult(
        command="bell",
        parameters=parameters,
        payload={"value": str(value)},
        csv_header=["value"],
        csv_rows=[[str(value)]],
        summary=f"{name}: {len(str(value))} digits",
    )


# ---------------------------------------------------------------------------
# parser and entry point


def _add_graph_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument(
        "--forest", nargs=2, type=int, metavar=("N", "C"),
        help="forest with N vertices and C components",
    )
    group.add_argument("--cycle", type=int, metavar="N", help="cycle on N vertices")
    group.add_argument(
        "--empty", type=int, metavar="N", help="empty graph on N vertices"
    )
    group.add_argument("--path", type=int, metavar="N", help="path on N vertices")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv"), default="json",
        help="stdout record format (default json)",
    )
    common.add_argument(
        "--bell-cache", metavar="PATH",
        help="load Bell numbers from PATH if present, save them back after",
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress the stderr summary"
    )

    parser = argparse.ArgumentParser(
        prog="graphstirling",
        description=(
            "Exact graphical Stirling numbers, Stirling polynomials, root "
            "certificates, and normality diagnostics for forests and cycles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, graph: bool = True, plot: bool = False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if graph:
            _add_graph_flags(p)
        if plot:
            p.add_argument(
                "--plot-dir", metavar="DIR",
                help="also render a figure and its data series into DIR",
            )
        p.set_defaults(handler=handler)
        return p

    add("table", cmd_table, "partition counts S(G,k)", plot=True)
    add("poly", cmd_poly, "Stirling polynomial coefficients")
    add("roots", cmd_roots, "real-root count and isolating intervals")

    p = sub.add_parser(
        "interlace", parents=[common], help="the five forest interlacing relations"
    )
    p.add_argument("--c", type=int, required=True, help="component count c >= 1")
    p.add_argument("--n", type=int, required=True, help="vertex count n >= c")
    p.set_defaults(handler=cmd_interlace)

    add("ulc", cmd_ulc, "ultra log-concavity of the count vector")
    add("moments", cmd_moments, "exact and estimated block-count moments")
    add("normality", cmd_normality, "normal-approximation diagnostics", plot=True)
    add("estimates", cmd_estimates, "Lambert-W estimates and scaled deviations")

    p = sub.add_parser(
        "oracle-check", parents=[common],
        help="compare formulas against brute-force enumeration",
    )
    p.add_argument(
        "--max-n", type=int, default=7, metavar="N",
        help="largest forest size to enumerate, 1..12 (default 7)",
    )
    p.set_defaults(handler=cmd_oracle_check)

    p = sub.add_parser(
        "bell", parents=[common], help="Bell number B_n or a graph Bell number"
    )
    _add_graph_flags(p, required=False)
    p.add_argument("--n", type=int, help="index for a plain Bell number")
    p.set_defaults(handler=cmd_bell)

    return parser


def _emit(result: CommandResult, args: argparse.Namespace) -> None:
    if args.format == "json":
        record = {
            "command": result.command,
            "parameters": result.parameters,
            "payload": result.payload,
        }
        print(json.dumps(record, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(result.csv_header)
        for row in result.csv_rows:
            writer.writerow([_cell(v) for v in row])
    if not args.quiet:
        print(result.summary, file=sys.stderr)
        for path_written in result.plot_files:
            print(f"wrote {path_written}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.bell_cache and os.path.exists(args.bell_cache):
            cached = load_bell_cache(args.bell_cache)
            try:
                default_bells.adopt(cached.known())
            except ValueError:
                raise CacheFormatError(2, "cache conflicts with computed values")
        result = args.handler(args)
    except CacheFormatError as exc:
        print(f"bell cache: {exc}", file=sys.stderr)
        return 5
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 3
    if args.bell_cache:
        save_bell_cache(args.bell_cache, default_bells)
    _emit(result, args)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
