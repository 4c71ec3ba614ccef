"""Command line entry point: ``fockshuffle <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import dump as dumpmod
from . import fockrep, shufflealg, theta
from .partitions import parse_partition
from .report import Report
from .suites import SUITES, Config, run_suite


def _common(p: argparse.ArgumentParser):
    p.add_argument("--max-size", type=int, default=5, help="largest partition size (default 5)")
    p.add_argument("--series-order", type=int, default=8, help="psi series truncation order (default 8)")
    p.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    p.add_argument("--seed", type=int, default=0, help="sample point seed, used only in sampled mode")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="include wall times in the report")


def _config(args) -> Config:
    cfg = Config(args.max_size, args.series_order, args.mode, args.seed, args.jobs)
    cfg.validate()
    return cfg


def _gens(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockshuffle", description="Exact checks of the Ding-Iohara and shuffle algebra actions on the Fock space.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a named suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    _common(p)

    p = sub.add_parser("verify", help="check one defining relation of the algebra")
    p.add_argument("--relation", type=int, required=True, choices=range(1, 6))
    _common(p)

    p = sub.add_parser("shuffle", help="shuffle algebra checks")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("k-commute", help="K_m * K_n = K_n * K_m")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    _common(q)
    q = ssub.add_parser("wheel", help="wheel condition for products of x^r generators")
    q.add_argument("--gens", type=_gens, default=(-1, 0, 1), help="comma separated exponents, e.g. 1,0,-1")
    _common(q)

    p = sub.add_parser("macdonald", help="print P_lam in a chosen basis")
    p.add_argument("--partition", type=parse_partition, required=True)
    p.add_argument("--basis", choices=("m", "p", "e"), default="m")
    _common(p)

    p = sub.add_parser("theta", help="normalized basis and Macdonald correspondence")
    tsub = p.add_subparsers(dest="action", required=True)
    q = tsub.add_parser("verify", help="K~_n against the specialized Pieri coefficients")
    q.add_argument("--n", type=int, required=True)
    _common(q)
    q = tsub.add_parser("heisenberg", help="check h_i and optionally write its matrix")
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--dump", metavar="PATH", help="write the normalized matrix of h_i here")
    _common(q)

    p = sub.add_parser("dump", help="write an operator matrix or table as canonical JSON")
    p.add_argument("kind", choices=dumpmod.KINDS)
    p.add_argument("--r", type=int, default=0, help="mode index for e-matrix / f-matrix")
    p.add_argument("--n", type=int, default=1, help="source size for e/f matrices, index for k-matrix")
    p.add_argument("--degree", type=int, default=None, help="top degree for macdonald (default --max-size)")
    p.add_argument("--basis", choices=("m", "p", "e"), default="m")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    _common(p)
    return parser


def _emit(report: Report, args) -> int:
    if args.format == "json":
        sys.stdout.write(report.dumps(args.timings))
    else:
        sys.stdout.write(report.to_text(args.timings))
    bad = report.first_failure()
    if bad is None:
        return 0
    print(f"first failure {bad.identity}: {json.dumps(bad.witness, ensure_ascii=False)}", file=sys.stderr)
    return 1


def _run_checks(name: str, cfg: Config, checks) -> Report:
    return Report(name, cfg.params(), list(checks))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    fld = cfg.field
    cmd = args.command

    if cmd == "run":
        return _emit(run_suite(args.suite, cfg), args)

    if cmd == "verify":
        checks = fockrep.verify_relation(args.relation, nmax=cfg.max_size, order=cfg.series_order, fld=fld)
        return _emit(_run_checks(f"relation{args.relation}", cfg, checks), args)

    if cmd == "shuffle":
        if args.action == "k-commute":
            check = shufflealg.verify_k_commute(args.m, args.n, cfg.max_size, fld)
            return _emit(_run_checks("k-commute", cfg, [check]), args)
        return _emit(_run_checks("wheel", cfg, [shufflealg.verify_wheel(args.gens)]), args)

    if cmd == "macdonald":
        entry = dumpmod.macdonald_entry(args.partition, args.basis, fld)
        if args.format == "json":
            sys.stdout.write(dumpmod.canonical_json(entry))
        else:
            for mu, c in entry["coeffs"].items():
                print(f"{args.basis}{mu}: {c}")
        return 0

    if cmd == "theta":
        if args.action == "verify":
            return _emit(_run_checks("theta", cfg, [theta.verify_theta(args.n, cfg.max_size, fld)]), args)
        i = args.i
        checks = [
            theta.verify_heisenberg_commute(i, cfg.max_size, fld),
            theta.verify_intertwining(i, cfg.max_size, fld),
        ]
        if args.dump:
            op = theta.heisenberg_plus(i, cfg.max_size, fld)
            text = dumpmod.canonical_json({"kind": "heisenberg", "i": i, "max_size": cfg.max_size, **op.to_json(fld)})
            with open(args.dump, "w", encoding="utf-8") as fh:
                fh.write(text)
        return _emit(_run_checks("heisenberg", cfg, checks), args)

    if cmd == "dump":
        params = {
            "r": args.r,
            "n": args.n,
            "max_size": cfg.max_size,
            "order": cfg.series_order,
            "degree": args.degree if args.degree is not None else cfg.max_size,
            "basis": args.basis,
        }
        try:
            text = dumpmod.dump(args.kind, params, args.out, fld)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if args.out is None:
            sys.stdout.write(text)
        return 0

    raise AssertionError(cmd)


if __name__ == "__main__":
    sys.exit(main())
