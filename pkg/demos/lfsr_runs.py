"""Runs in an m-sequence and how they move under the shift k_beta.

Uses f = 2 + 2x + x^4 over F_3 with seed 1000.  Counting k_beta places
forward from a run of zeroes lengthens it by one exactly when beta is a
root of the run's polynomial P.
"""

from lfsrooa.field import format_poly, roots_with_multiplicity
from lfsrooa.lfsr import (
    LfsrSpec,
    expected_run_census,
    find_runs,
    generate_period,
    k_beta,
    run_census,
    theorem1_polynomial,
    z_count,
)


def main():
    spec = LfsrSpec(3, [2, 2, 0, 0, 1], seed=[1, 0, 0, 0])
    seq = generate_period(spec)
    print(f"f = {format_poly(spec.poly)}  period = {spec.period}  k = {spec.k}")
    print(str(seq)[:40])
    print(str(seq)[40:])

    ks = {beta: k_beta(spec, beta) for beta in (1, 2)}
    print("k_beta:", ks)

    # the run census is the same for every primitive polynomial of this degree
    assert run_census(seq) == expected_run_census(3, 4)
    for (sym, length), n in sorted(run_census(seq).items()):
        print(f"  runs of {sym} with length {length}: {n}")

    print()
    for run in find_runs(seq):
        if run.symbol != 0 or run.length != 1:
            continue
        P = theorem1_polynomial(spec, seq, run.start, 1)
        roots = dict(roots_with_multiplicity(P))
        line = f"zero run at {run.start:2d}: P = {format_poly(P)}"
        for beta, kb in ks.items():
            z = z_count(spec, seq, run.start, 1, beta)
            assert z == roots.get(beta, 0)
            line += f"  beta={beta}: +{kb} -> {seq.window(run.start + kb - 1, 4)} z={z}"
        print(line)


if __name__ == "__main__":
    main()
