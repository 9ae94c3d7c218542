"""Command-line frontend.

Exit codes: 0 when every verdict is theorem-consistent (or a search came
out as expected), 1 on a violation, an inconclusive verdict or an
unexpected oracle hit, 2 on bad usage or a failed precondition.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from . import __version__
from .descent import DescentError, descent_trace
from .oracles import cohn_oracle, corollary_c_oracle, lemma_l2_oracle
from .report import dumps, to_csv
from .sieve import parity_certificate
from .solver import Bounds, find_solutions, verify_instance, verify_range
from .triples import InstanceError, make_instance, scan_instances

REPORT_DIR_ENV = "TERAI_REPORT_DIR"

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument(
        "--out",
        type=Path,
        help=f"report file (default: stdout, or ${REPORT_DIR_ENV}/<command>.<format> if set)",
    )


def _add_mn(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--n", type=positive_int, required=True)


def _add_bounds(p: argparse.ArgumentParser) -> None:
    d = Bounds()
    g = p.add_argument_group("bounds")
    g.add_argument("--y-max", type=positive_int, default=d.y_max)
    g.add_argument("--z-max", type=positive_int, default=d.z_max)
    g.add_argument("--r-max", type=positive_int, default=d.r_max)
    g.add_argument("--k-max", type=positive_int, default=d.k_max)
    g.add_argument("--cohn-k-max", type=positive_int, default=d.cohn_k_max)
    g.add_argument("--cohn-z-max", type=positive_int, default=d.cohn_z_max)
    g.add_argument("--corollary-y-max", type=positive_int, default=d.corollary_y_max)
    g.add_argument("--corollary-q", type=positive_int, nargs="+", default=list(d.corollary_q))
    g.add_argument("--l2-m-max", type=positive_int, default=d.l2_m_max)
    g.add_argument("--l2-y-max", type=positive_int, default=d.l2_y_max)
    g.add_argument("--jobs", type=positive_int, default=1, help="worker processes")


def _bounds(args: argparse.Namespace) -> Bounds:
    return Bounds(
        y_max=args.y_max,
        z_max=args.z_max,
        r_max=args.r_max,
        k_max=args.k_max,
        cohn_k_max=args.cohn_k_max,
        cohn_z_max=args.cohn_z_max,
        corollary_y_max=args.corollary_y_max,
        corollary_q=tuple(args.corollary_q),
        l2_m_max=args.l2_m_max,
        l2_y_max=args.l2_y_max,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="terai",
        description="Verification and search for x^2 + (m^2-n^2)^y = (m^2+n^2)^z.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="list qualifying (m, n) instances")
    p.add_argument("--m-max", type=positive_int, required=True)
    _add_output(p)

    p = sub.add_parser("verify", help="full pipeline for one instance")
    _add_mn(p)
    _add_bounds(p)
    _add_output(p)

    p = sub.add_parser("verify-range", help="full pipeline for every instance up to m-max")
    p.add_argument("--m-max", type=positive_int, required=True)
    _add_bounds(p)
    _add_output(p)

    p = sub.add_parser("solve", help="brute-force x^2 + b^y = c^z")
    p.add_argument("--b", type=positive_int, required=True)
    p.add_argument("--c", type=positive_int, required=True)
    p.add_argument("--y-max", type=positive_int, default=Bounds.y_max)
    p.add_argument("--z-max", type=positive_int, default=Bounds.z_max)
    _add_output(p)

    p = sub.add_parser("sieve", help="Jacobi parity certificate")
    _add_mn(p)
    _add_output(p)

    p = sub.add_parser("trace", help="replay the descent on one solution")
    _add_mn(p)
    p.add_argument("--x", type=positive_int, required=True)
    p.add_argument("--y", type=positive_int, required=True)
    p.add_argument("--z", type=positive_int, required=True)
    _add_output(p)

    p = sub.add_parser("oracle", help="bounded searches for the external results")
    osub = p.add_subparsers(dest="oracle", required=True)
    o = osub.add_parser("cohn", help="2 z^k = y^2 + 1")
    o.add_argument("--k-max", type=positive_int, default=Bounds.cohn_k_max)
    o.add_argument("--z-max", type=positive_int, default=Bounds.cohn_z_max)
    _add_output(o)
    o = osub.add_parser("corollary-c", help="y^q = a^2 + (a+1)^2, q odd")
    o.add_argument("--y-max", type=positive_int, default=Bounds.corollary_y_max)
    o.add_argument("--q", type=positive_int, nargs="+", default=list(Bounds.corollary_q))
    _add_output(o)
    o = osub.add_parser("lemma-l2", help="x^2 + p^(2m) = 2 y^n")
    o.add_argument("--p", type=positive_int, required=True)
    o.add_argument("--n", type=positive_int, required=True)
    o.add_argument("--m-max", type=positive_int, default=Bounds.l2_m_max)
    o.add_argument("--y-max", type=positive_int, default=Bounds.l2_y_max)
    _add_output(o)
    return parser


def _config(args: argparse.Namespace) -> dict:
    cfg = {}
    for key, value in sorted(vars(args).items()):
        if key == "out":
            value = None if value is None else str(value)
        cfg[key] = value
    return cfg


def _envelope(args: argparse.Namespace, body: dict) -> dict:
    return {"version": __version__, "config": _config(args), **body}


# Each command returns (exit code, json body, csv text or None, text lines).
Result = Tuple[int, dict, Optional[str], List[str]]


def _cmd_scan(args) -> Result:
    instances = scan_instances(max(args.m_max, 2))
    rows = [[i.m, i.n, i.a, i.b, i.c, i.p, i.q] for i in instances]
    text = [f"{len(instances)} qualifying instances with m <= {args.m_max}"]
    text += [f"  (m, n) = ({i.m}, {i.n})  a={i.a} b={i.b} c={i.c} p={i.p} q={i.q}" for i in instances]
    body = {"instances": [i.as_dict() for i in instances], "count": len(instances)}
    return EXIT_OK, body, to_csv(["m", "n", "a", "b", "c", "p", "q"], rows), text


def _report_text(rep) -> List[str]:
    inst = rep.instance
    lines = [
        f"instance (m, n) = ({inst.m}, {inst.n}): a={inst.a} b={inst.b} c={inst.c} p={inst.p} q={inst.q}",
        f"  parity symbols {rep.parity.symbols} valid={rep.parity.valid}",
        f"  case scan: {len(rep.case_scan)} odd (r, k) cells",
        f"  solutions: {[s.as_tuple() for s in rep.solutions]}",
    ]
    for o in rep.oracles:
        lines.append(f"  oracle {o.window.name} {o.window.as_dict()}: {len(o.hits)} hits")
    for v in rep.violations:
        lines.append(f"  violation: {v}")
    lines.append(f"  verdict: {rep.verdict} ({rep.elapsed_ms} ms)")
    return lines


def _cmd_verify(args) -> Result:
    inst = make_instance(args.m, args.n)
    rep = verify_instance(inst, _bounds(args))
    code = EXIT_OK if rep.consistent else EXIT_VIOLATION
    rows = [row.as_list() for row in rep.case_scan]
    return code, rep.as_dict(), to_csv(["r", "k", "case_a", "case_b"], rows), _report_text(rep)


def _cmd_verify_range(args) -> Result:
    reports = verify_range(max(args.m_max, 2), _bounds(args), jobs=args.jobs)
    verdicts = {}
    for rep in reports:
        verdicts[rep.verdict] = verdicts.get(rep.verdict, 0) + 1
    ok = all(rep.consistent for rep in reports)
    body = {
        "reports": [rep.as_dict() for rep in reports],
        "summary": {"count": len(reports), "verdicts": verdicts},
        "verdict": "theorem-consistent" if ok else "VIOLATION" if "VIOLATION" in verdicts else "inconclusive",
    }
    rows = [
        [r.instance.m, r.instance.n, len(r.solutions), r.verdict, r.elapsed_ms] for r in reports
    ]
    text = []
    for rep in reports:
        text += _report_text(rep)
    text.append(f"{len(reports)} instances: {verdicts}")
    csv_text = to_csv(["m", "n", "solutions", "verdict", "elapsed_ms"], rows)
    return (EXIT_OK if ok else EXIT_VIOLATION), body, csv_text, text


def _cmd_solve(args) -> Result:
    sols = find_solutions(args.b, args.c, args.y_max, args.z_max)
    triples = [s.as_tuple() for s in sols]
    body = {"b": args.b, "c": args.c, "solutions": [list(t) for t in triples]}
    text = [f"x^2 + {args.b}^y = {args.c}^z, y <= {args.y_max}, z <= {args.z_max}: {len(sols)} solutions"]
    text += [f"  (x, y, z) = {t}" for t in triples]
    return EXIT_OK, body, to_csv(["x", "y", "z"], triples), text


def _cmd_sieve(args) -> Result:
    inst = make_instance(args.m, args.n)
    cert = parity_certificate(inst)
    names = ("j_minus1_c", "j_b_c", "j_c_b", "j_2_c", "j_2_b")
    body = {
        "instance": inst.as_dict(),
        "parity": {
            "symbols": dict(zip(names, cert.symbols)),
            "valid": cert.valid,
            "conclusions": cert.conclusions(),
            "deviations": list(cert.deviations),
        },
    }
    text = [f"({inst.m}, {inst.n}): symbols {cert.symbols}, valid={cert.valid}"]
    text += [f"  {k}: {v}" for k, v in cert.conclusions().items() if v]
    text += [f"  deviation: {d}" for d in cert.deviations]
    csv_text = to_csv(["m", "n", *names, "valid"], [[inst.m, inst.n, *cert.symbols, cert.valid]])
    return (EXIT_OK if cert.valid else EXIT_VIOLATION), body, csv_text, text


def _cmd_trace(args) -> Result:
    if args.format == "csv":
        raise UsageError("trace output is available as json or text only")
    inst = make_instance(args.m, args.n)
    trace = descent_trace(inst, args.x, args.y, args.z)
    d = trace.as_dict()
    text = [f"descent for (m, n) = ({inst.m}, {inst.n}), (x, y, z) = {trace.solution}"]
    text += [f"  {key}: {d[key]}" for key in ("r", "k", "legs", "case", "decompositions", "survivors",
                                               "chosen", "epsilon", "t1", "t2", "P", "Q", "conclusion")]
    text += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in trace.identity_checks]
    text.append(f"  verdict: {trace.verdict}")
    return (EXIT_OK if trace.consistent else EXIT_VIOLATION), {"trace": d}, None, text


def _cmd_oracle(args) -> Result:
    if args.oracle == "cohn":
        res = cohn_oracle(args.k_max, args.z_max)
        header = ["y", "z", "k"]
    elif args.oracle == "corollary-c":
        res = corollary_c_oracle(args.y_max, args.q)
        header = ["y", "q", "a"]
    else:
        res = lemma_l2_oracle(args.p, args.n, args.m_max, args.y_max)
        header = ["x", "y", "m"]
    text = [f"oracle {res.window.name} window {res.window.as_dict()}: {len(res.hits)} hits"]
    text += [f"  {h}" for h in res.hits]
    text += [f"  unexpected: {h}" for h in res.unexpected]
    code = EXIT_OK if res.as_expected else EXIT_VIOLATION
    return code, {"oracle": res.as_dict()}, to_csv(header, res.hits), text


COMMANDS = {
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "verify-range": _cmd_verify_range,
    "solve": _cmd_solve,
    "sieve": _cmd_sieve,
    "trace": _cmd_trace,
    "oracle": _cmd_oracle,
}


def _destination(args: argparse.Namespace) -> Optional[Path]:
    if args.out is not None:
        return args.out
    report_dir = os.environ.get(REPORT_DIR_ENV)
    if report_dir:
        name = args.command if args.command != "oracle" else f"oracle-{args.oracle}"
        return Path(report_dir) / f"{name}.{args.format}"
    return None


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, body, csv_text, text = COMMANDS[args.command](args)
    except (UsageError, InstanceError, DescentError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        output = dumps(_envelope(args, body))
    elif args.format == "csv":
        output = csv_text
    else:
        output = "\n".join(text) + "\n"

    dest = _destination(args)
    if dest is None:
        sys.stdout.write(output)
    else:
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(output)
    return code


def main() -> None:
    sys.exit(run())
