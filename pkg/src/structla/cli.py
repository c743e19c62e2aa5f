"""Command-line front end: gen | solve | verify | bench."""

import argparse
import csv
import statistics
import sys

from . import io
from .errors import StructlaError
from .field import FieldCtx
from .solver import solve, verify
from .structured import DEFAULT_PRIME, STRUCTURES, random_instance

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_INCONSISTENT = 3


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def cmd_gen(args):
    try:
        F = FieldCtx(args.prime)
        rhs = None if args.rhs == "none" else args.rhs
        g, v = random_instance(args.structure, args.m, args.n, args.alpha, args.seed,
                               wide_nullspace=args.wide, field=F, rhs=rhs, kind=args.kind,
                               rank=args.rank, shift=args.shift)
    except (StructlaError, ValueError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_BAD_INPUT
    io.save_instance(args.out, g, v)
    return EXIT_OK


def cmd_solve(args):
    try:
        g, v = io.load_instance(args.instance)
    except (OSError, StructlaError, ValueError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_BAD_INPUT
    out = solve(g, v, method=args.method)
    io.save_solution(args.out, out, g)
    if out.u is None:
        print(f"inconsistent; nullity {out.nullity}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(f"solved; nullity {out.nullity}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    try:
        g, v = io.load_instance(args.instance)
        raw = io.load_json(args.solution)
        out = io.solution_from_dict(raw, g)
    except (OSError, StructlaError, ValueError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_BAD_INPUT
    dense = False if args.no_dense else None
    rep = verify(g, v, out, dense_check=dense, dense_limit=args.dense_limit)
    declared = raw.get("nullity")
    ok = declared == out.nullity
    rep.add("nullity_field", ok, "" if ok else f"file says {declared}, sum of t is {out.nullity}")
    print(rep)
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_bench(args):
    F = FieldCtx(args.prime)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["structure", "m", "n", "alpha", "phase1_ms", "phase2_ms", "phase3_ms", "total_ms"])
    for n in sizes:
        g, v = random_instance(args.structure, n, n, args.alpha, args.seed, field=F, rhs="random")
        runs = [solve(g, v).timings for _ in range(args.reps)]
        med = {k: statistics.median(r[k] for r in runs) * 1000 for k in ("phase1", "phase2", "phase3", "total")}
        w.writerow([args.structure, n, n, args.alpha] + [f"{med[k]:.3f}" for k in ("phase1", "phase2", "phase3", "total")])
        sys.stdout.flush()
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="structla", description="Exact structured linear solving over prime fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a seeded random instance")
    g.add_argument("--structure", choices=STRUCTURES, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--alpha", type=int, required=True)
    g.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--wide", action="store_true", help="force n > m so the nullspace is nontrivial")
    g.add_argument("--rhs", choices=["random", "zero", "consistent", "none"], default="random")
    g.add_argument("--kind", choices=["generic", "lowrank", "shift"], default="generic")
    g.add_argument("--rank", type=int, default=None, help="rank of a lowrank instance")
    g.add_argument("--shift", type=int, default=1, help="power of Z for a shift instance")
    g.add_argument("--out", default="-", help="output path (default: stdout)")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance")
    s.add_argument("out", nargs="?", default="-")
    s.add_argument("--method", choices=["approximant", "popov"], default="approximant",
                   help="how simultaneous solution bases are computed")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against its instance")
    v.add_argument("instance")
    v.add_argument("solution")
    v.add_argument("--no-dense", action="store_true", help="skip the dense cross-check")
    v.add_argument("--dense-limit", type=int, default=64)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time square solves, CSV on stdout")
    b.add_argument("--structure", choices=STRUCTURES, required=True)
    b.add_argument("--alpha", type=int, required=True)
    b.add_argument("--sizes", required=True, help="comma-separated sizes")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
