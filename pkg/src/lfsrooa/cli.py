"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construct import build_rts_ooa, build_runs_ooa, runs_column_map
from .field import enumerate_primitive_polys, field_of_order, format_poly, parse_poly
from .hyper import (
    build_H_tms,
    build_PI,
    format_vertex_map,
    is_homomorphism,
    pullback_voa,
    read_hypergraph,
    read_vertex_map,
    runs_vertex_map,
    subinterval_voa,
    verify_voa,
)
from .lfsr import LfsrSpec, generate_period, k_beta
from .ooa import coverage_ratio, format_ooa, read_ooa, table1_stats, verify_ooa

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _need(args, *names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.verb} requires {' '.join(missing)}")


def _spec(args) -> LfsrSpec:
    _need(args, "q", "t")
    F = field_of_order(args.q)
    if args.poly is None:
        polys = enumerate_primitive_polys(F, args.t)
        poly = polys[0].coeffs
    else:
        poly = parse_poly(args.poly)
        if len(poly) != args.t + 1:
            raise UsageError(f"--poly must have {args.t + 1} coefficients")
    seed = parse_poly(args.seed) if args.seed else None
    return LfsrSpec(F, poly, seed)


def cmd_field_info(args) -> int:
    _need(args, "q")
    F = field_of_order(args.q)
    print(f"GF({F.q}) p={F.p} n={F.n} modulus={format_poly(F.modulus)}")
    print(f"generator={F.alpha}")
    print("powers: " + " ".join(str(F.exp(i)) for i in range(F.q - 1)))
    return EXIT_OK


def cmd_primitive_polys(args) -> int:
    _need(args, "q", "t")
    for f in enumerate_primitive_polys(args.q, args.t):
        print(format_poly(f))
    return EXIT_OK


def cmd_lfsr(args) -> int:
    spec = _spec(args)
    seq = generate_period(spec)
    lines = [
        f"poly={format_poly(spec.poly)} seed={format_poly(spec.seed)} "
        f"period={spec.period} k={spec.k}",
        "k_beta: " + " ".join(f"{b}:{k_beta(spec, b)}" for b in range(1, spec.q)),
        str(seq),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_runs_ooa(args) -> int:
    arr = build_runs_ooa(_spec(args))
    _emit(format_ooa(arr), args.out)
    return EXIT_OK


def cmd_rts_ooa(args) -> int:
    _need(args, "q", "t")
    _emit(format_ooa(build_rts_ooa(args.q, args.t)), args.out)
    return EXIT_OK


def _load(args):
    _need(args, "file")
    arr = read_ooa(args.file)
    if args.lam is not None:
        if args.lam != arr.lam:
            raise UsageError(f"--lambda {args.lam} disagrees with the file's lambda={arr.lam}")
    return arr


def cmd_verify(args) -> int:
    report = verify_ooa(_load(args))
    print(report.format(with_failures=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_coverage(args) -> int:
    arr = _load(args)
    if args.mode == "all-tsets":
        print(coverage_ratio(arr))
        return EXIT_OK
    report = verify_ooa(arr)
    print(report.format(with_failures=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_table1(args) -> int:
    _need(args, "q", "t")
    print(table1_stats(args.q, args.t))
    return EXIT_OK


def cmd_hypergraph_check(args) -> int:
    if args.graph or args.target or args.map:
        if not (args.graph and args.target and args.map):
            raise UsageError("--graph, --target and --map go together")
        G, H = read_hypergraph(args.graph), read_hypergraph(args.target)
        ok = is_homomorphism(G, H, read_vertex_map(args.map))
        print(f"homomorphism={'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_FAIL

    spec = _spec(args)
    t, q = spec.t, spec.q
    G, H = build_H_tms(t, q + 1, t), build_PI(t - 1, q)
    f = runs_vertex_map(spec)
    hom = is_homomorphism(G, H, f)
    voa = subinterval_voa(spec)
    base = verify_voa(voa, H)
    print(f"H_{{{t},{q + 1},{t}}} -> PI_{{{t - 1},{q}}} homomorphism={'yes' if hom else 'no'}")
    print(f"subinterval array over PI: {base}")
    ok = hom and base.ok
    if hom:
        pulled = pullback_voa(voa, G, H, f, check=False)
        ooa = build_runs_ooa(spec, verify=False)
        same = (pulled.to_ooa(t, q + 1, t).rows == ooa.rows).all()
        report = verify_voa(pulled, G)
        print(f"pullback over H: {report}")
        print(f"pullback equals runs-ooa: {'yes' if same else 'no'}")
        ok = ok and report.ok and bool(same)
    cmap = runs_column_map(spec)
    if cmap.collisions:
        print("shared columns: " + " ".join(f"{c}:{len(v)}" for c, v in sorted(cmap.collisions.items())))
    if args.out:
        Path(args.out).write_text(format_vertex_map(f))
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "field-info": cmd_field_info,
    "primitive-polys": cmd_primitive_polys,
    "lfsr": cmd_lfsr,
    "runs-ooa": cmd_runs_ooa,
    "rts-ooa": cmd_rts_ooa,
    "verify": cmd_verify,
    "coverage": cmd_coverage,
    "table1": cmd_table1,
    "hypergraph-check": cmd_hypergraph_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lfsrooa",
        description="Ordered orthogonal arrays from LFSR sequences over finite fields.",
    )
    p.add_argument("verb", choices=sorted(COMMANDS))
    p.add_argument("--q", type=int, help="field order (prime power)")
    p.add_argument("--t", type=int, help="strength / polynomial degree")
    p.add_argument("--poly", help="characteristic polynomial, constant term first, e.g. 1,1,0,0,1")
    p.add_argument("--seed", help="initial state a_0,...,a_{t-1} (default 0,...,0,1)")
    p.add_argument("--file", help="input OOA file")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--mode", choices=["left-justified", "all-tsets"], default="left-justified")
    p.add_argument("--lambda", dest="lam", type=int, help="expected index lambda")
    p.add_argument("--graph", help="hypergraph-check: source hypergraph file")
    p.add_argument("--target", help="hypergraph-check: target hypergraph file")
    p.add_argument("--map", help="hypergraph-check: vertex map file")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
