"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input data, 3 a checked
claim does not hold or an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .codefile import load_code, save_code
from .constructions import (
    CatastrophicCornerWarning,
    ab_family,
    justesen_rate_half,
    lifted_justesen,
    palindrome_lift,
    theorem3_code,
)
from .convcode import ConvCode, error_capabilities, is_catastrophic, singleton_bound
from .distance import (
    DEFAULT_STATE_CAP,
    brute_force_min_weight,
    free_distance,
    window_min_weight,
)
from .errors import ConsistencyError, ConvMDSError, InvalidCodeFileError
from .gf import Felt, make_field, primitive_elements

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3

# (q, alpha) pairs whose lifted code is expected to be MDS; every other
# primitive element of F_9 and F_11 is expected not to be.
LIFT_FIELDS = ((3, 2), (11, 1))
LIFT_EXPECTED_MDS = {(11, 2)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rep(x: Felt):
    r = x.rep
    return list(r) if isinstance(r, tuple) else r


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


# -- analyze ---------------------------------------------------------------

def analyze_report(code: ConvCode, skip_distance: bool = False, timings: bool = False) -> dict:
    times = {}
    t0 = time.perf_counter()
    cat = is_catastrophic(code)
    times["catastrophicity"] = time.perf_counter() - t0
    bound = singleton_bound(code.n, code.k, code.degree)
    report = {
        "command": "analyze",
        "parameters": {"n": code.n, "k": code.k, "delta": code.degree, "q": code.field.q,
                       "p": code.field.p, "m": code.field.m},
        "singleton_bound": bound,
        "is_catastrophic": cat.is_catastrophic,
        "minor_gcd": cat.minor_gcd.to_list(),
        "witness_factor": cat.witness_factor.to_list() if cat.witness_factor is not None else None,
        "d_free": None,
        "is_mds": None,
        "witness_input": None,
        "witness_codeword": None,
        "capabilities": None,
    }
    if not skip_distance:
        t0 = time.perf_counter()
        dist = free_distance(code)
        times["free_distance"] = time.perf_counter() - t0
        if dist.bound != bound or dist.is_mds != (dist.d_free == bound):
            raise ConsistencyError("MDS verdict disagrees with the Singleton bound")
        cap = error_capabilities(dist.d_free)
        report.update(
            d_free=dist.d_free,
            is_mds=dist.is_mds,
            witness_input=dist.witness_input.to_list(),
            witness_codeword=[v.to_list() for v in dist.witness_codeword],
            capabilities={"detect_s": cap.detect_s, "correct_t": cap.correct_t},
        )
    if timings:
        report["timings"] = {k: round(v, 6) for k, v in times.items()}
    return report


def _analyze_lines(r: dict) -> list[str]:
    p = r["parameters"]
    lines = [
        f"code: ({p['n']},{p['k']},{p['delta']}) over F_{p['q']}",
        f"singleton bound: {r['singleton_bound']}",
        f"catastrophic: {'yes' if r['is_catastrophic'] else 'no'} (minor gcd {r['minor_gcd']})",
    ]
    if r["witness_factor"] is not None:
        lines.append(f"irreducible factor: {r['witness_factor']}")
    if r["d_free"] is None:
        lines.append("free distance: skipped")
    else:
        lines += [
            f"free distance: {r['d_free']}",
            f"MDS: {'yes' if r['is_mds'] else 'no'}",
            f"witness input: {r['witness_input']}",
            f"witness codeword: {r['witness_codeword']}",
            f"detects {r['capabilities']['detect_s']} errors, corrects {r['capabilities']['correct_t']}",
        ]
    if "timings" in r:
        lines.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in r["timings"].items()))
    return lines


def cmd_analyze(args) -> int:
    code = load_code(args.path)
    report = analyze_report(code, args.skip_distance, args.timings)
    _emit(report, args.json, _analyze_lines(report))
    return EXIT_OK


# -- construct -------------------------------------------------------------

def _parse_element(field, text: str):
    parts = [int(x) for x in text.split(":")] if ":" in text or field.m > 1 else None
    if parts is None:
        return field(int(text))
    if len(parts) != field.m:
        raise UsageError(f"element {text!r} needs {field.m} ':'-separated coefficients")
    return field(parts)


def _parse_rows(field, text: str):
    rows = [[_parse_element(field, e) for e in row.split(",")] for row in text.split(";")]
    if len(rows) != 3:
        raise UsageError("--rows needs three ';'-separated rows G0;G1;G2")
    return rows


def cmd_construct(args) -> int:
    try:
        if args.which == "theorem3":
            code = theorem3_code()
        elif args.which == "ab":
            if args.a is None or args.b is None:
                raise UsageError("ab needs --a and --b")
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", CatastrophicCornerWarning)
                code = ab_family(args.a, args.b)
            for w in caught:
                print(f"warning: {w.message}", file=sys.stderr)
        else:
            if args.p is None:
                raise UsageError(f"{args.which} needs --p")
            field = make_field(args.p, args.m)
            if args.which == "justesen":
                if args.alpha is None:
                    raise UsageError("justesen needs --alpha")
                code = justesen_rate_half(field, _parse_element(field, args.alpha))
            else:
                if args.rows is None:
                    raise UsageError("palindrome needs --rows G0;G1;G2")
                code = palindrome_lift(*_parse_rows(field, args.rows), field=field)
    except ValueError as exc:
        if isinstance(exc, ConvMDSError):
            raise
        raise UsageError(str(exc)) from exc
    save_code(code, args.out)
    summary = {
        "command": "construct",
        "which": args.which,
        "out": str(args.out),
        "parameters": {"n": code.n, "k": code.k, "delta": code.degree, "q": code.field.q},
        "generator": [[g.to_list() for g in row] for row in code.generator.entries],
    }
    _emit(summary, args.json, [
        f"wrote {args.out}",
        f"code: ({code.n},{code.k},{code.degree}) over F_{code.field.q}",
        f"generator: {summary['generator']}",
    ])
    return EXIT_OK


# -- search-ab -------------------------------------------------------------

def ab_row(ab: tuple[int, int]) -> dict:
    a, b = ab
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CatastrophicCornerWarning)
        code = ab_family(a, b)
    cat = is_catastrophic(code)
    dist = free_distance(code)
    return {
        "a": a,
        "b": b,
        "delta": code.degree,
        "d_free": dist.d_free,
        "bound": dist.bound,
        "is_mds": dist.is_mds,
        "is_catastrophic": cat.is_catastrophic,
        "minor_gcd": cat.minor_gcd.to_list(),
        "witness_input": dist.witness_input.to_list(),
    }


def ab_sweep(workers: int | None = None) -> list[dict]:
    pairs = [(a, b) for a in range(11) for b in range(11)]
    if workers is None:
        return [ab_row(ab) for ab in pairs]
    with ProcessPoolExecutor(max_workers=workers or None) as pool:
        return list(pool.map(ab_row, pairs))


def sweep_summary(rows: list[dict]) -> dict:
    family = [r for r in rows if (r["a"], r["b"]) != (1, 1)]
    clean = [r for r in family if not r["is_catastrophic"]]
    return {
        "pairs": len(rows),
        "catastrophic_pairs": [[r["a"], r["b"]] for r in family if r["is_catastrophic"]],
        "mds_pairs": [[r["a"], r["b"]] for r in rows if r["is_mds"]],
        "mds_noncatastrophic_pairs": [[r["a"], r["b"]] for r in clean if r["is_mds"]],
        "mds_noncatastrophic_delta5_pairs": [
            [r["a"], r["b"]] for r in clean if r["is_mds"] and r["delta"] == 5
        ],
        "mds_hits": sum(r["is_mds"] for r in clean),
        "noncatastrophic_count": len(clean),
    }


def cmd_search_ab(args) -> int:
    rows = ab_sweep(args.parallel)
    summary = sweep_summary(rows)
    report = {"command": "search-ab", "rows": rows, "summary": summary}
    lines = ["  a  b  delta  d_free  bound  mds  catastrophic"]
    for r in rows:
        flag = "  <- palindrome code" if (r["a"], r["b"]) == (1, 1) else ""
        lines.append(
            f"{r['a']:>3}{r['b']:>3}{r['delta']:>7}{r['d_free']:>8}{r['bound']:>7}"
            f"{'yes' if r['is_mds'] else 'no':>5}{'yes' if r['is_catastrophic'] else 'no':>14}{flag}"
        )
    lines.append(
        f"MDS hits among {summary['noncatastrophic_count']} noncatastrophic pairs "
        f"(excluding (1,1)): {summary['mds_hits']}, of which degree 5: "
        f"{len(summary['mds_noncatastrophic_delta5_pairs'])}"
    )
    lines.append(f"catastrophic pairs other than (1,1): {summary['catastrophic_pairs']}")
    _emit(report, args.json, lines)
    return EXIT_OK


# -- verify-remark ---------------------------------------------------------

def lift_rows() -> list[dict]:
    rows = []
    for p, m in LIFT_FIELDS:
        field = make_field(p, m)
        for alpha in primitive_elements(field):
            code = lifted_justesen(field, alpha)
            base = free_distance(justesen_rate_half(field, alpha))
            dist = free_distance(code)
            expected = (field.q, alpha.value) in LIFT_EXPECTED_MDS
            rows.append({
                "q": field.q,
                "alpha": _rep(alpha),
                "justesen_d_free": base.d_free,
                "justesen_bound": base.bound,
                "d_free": dist.d_free,
                "bound": dist.bound,
                "is_mds": dist.is_mds,
                "expected_mds": expected,
                "agrees": dist.is_mds == expected,
                "witness_input": dist.witness_input.to_list(),
            })
    return rows


def cmd_verify_remark(args) -> int:
    rows = lift_rows()
    passed = all(r["agrees"] for r in rows)
    report = {"command": "verify-remark", "rows": rows, "pass": passed}
    lines = []
    for r in rows:
        lines.append(
            f"F_{r['q']} alpha={r['alpha']}: (2,1,2) d_free={r['justesen_d_free']}/{r['justesen_bound']}, "
            f"lifted d_free={r['d_free']}/{r['bound']} -> {'MDS' if r['is_mds'] else 'not MDS'} "
            f"(expected {'MDS' if r['expected_mds'] else 'not MDS'}) {'ok' if r['agrees'] else 'MISMATCH'}"
            + ("" if r["is_mds"] else f" witness u={r['witness_input']}")
        )
    lines.append("PASS" if passed else "FAIL")
    _emit(report, args.json, lines)
    return EXIT_OK if passed else EXIT_MISMATCH


# -- window ----------------------------------------------------------------

def cmd_window(args) -> int:
    if args.len < 0:
        raise UsageError("--len must be >= 0")
    code = load_code(args.path)
    weight, prefix = window_min_weight(code, args.len)
    passed = weight >= args.min
    report = {
        "command": "window",
        "window_len": args.len,
        "threshold": args.min,
        "min_weight": weight,
        "witness_prefix": [_rep(x) for x in prefix],
        "pass": passed,
    }
    _emit(report, args.json, [
        f"minimum weight of v_0..v_{args.len}: {weight} (prefix {report['witness_prefix']})",
        f"{'PASS' if passed else 'FAIL'}: threshold {args.min}",
    ])
    return EXIT_OK if passed else EXIT_MISMATCH


# -- oracle ----------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.max_deg < 0:
        raise UsageError("--max-deg must be >= 0")
    code = load_code(args.path)
    weight, witness = brute_force_min_weight(code, args.max_deg)
    report = {
        "command": "oracle",
        "max_deg": args.max_deg,
        "oracle_weight": weight,
        "witness_input": witness.to_list(),
        "d_free": None,
        "consistent": None,
    }
    if code.field.q**code.degree <= DEFAULT_STATE_CAP:
        d_free = free_distance(code).d_free
        report["d_free"] = d_free
        report["consistent"] = weight >= d_free
    lines = [f"oracle minimum (deg u <= {args.max_deg}): {weight}, witness {report['witness_input']}"]
    if report["d_free"] is not None:
        relation = "matches" if weight == report["d_free"] else "is above"
        if not report["consistent"]:
            relation = "is BELOW"
        lines.append(f"free distance {report['d_free']}: oracle {relation} it")
    _emit(report, args.json, lines)
    return EXIT_MISMATCH if report["consistent"] is False else EXIT_OK


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convmds", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="parameters, catastrophicity, free distance and MDS status")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--skip-distance", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="write a code file for a named construction")
    p.add_argument("which", choices=["justesen", "theorem3", "palindrome", "ab"])
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--alpha", help="element as an integer, or c0:c1:... over F_{p^m}")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--rows", help="G0;G1;G2 with comma-separated elements, e.g. 8,8;5,6;1,1")
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search-ab", help="sweep all (a, b) in F_11^2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", type=int, nargs="?", const=0, default=None, metavar="WORKERS",
                   help="use a process pool (default size: CPU count)")
    p.set_defaults(func=cmd_search_ab)

    p = sub.add_parser("verify-remark", help="MDS status of the lifted Justesen codes over F_9 and F_11")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_remark)

    p = sub.add_parser("window", help="minimum weight of the first output coefficients")
    p.add_argument("path")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("oracle", help="brute-force minimum weight over bounded-degree inputs")
    p.add_argument("path")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"convmds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"convmds: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except InvalidCodeFileError as exc:
        print(f"convmds: invalid code file: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ConvMDSError as exc:
        print(f"convmds: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
