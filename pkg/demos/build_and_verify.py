"""Build OOA(t, q+1, t, q) both ways and compare how many t-sets they cover.

Every left-justified t-set is covered by either construction; the census
over all t-sets is where they differ.
"""

import sys

from lfsrooa.construct import build_rts_ooa, build_runs_ooa, runs_column_map
from lfsrooa.field import enumerate_primitive_polys, format_poly
from lfsrooa.lfsr import LfsrSpec
from lfsrooa.ooa import coverage_ratio, verify_ooa


def main(q=3, t=3):
    rts = build_rts_ooa(q, t)
    rts_cov = coverage_ratio(rts)
    print(f"q={q} t={t}: arrays have {q**t} rows and {(q + 1) * t} columns")
    print(f"RTS   verify: {verify_ooa(rts)}   all t-sets: {rts_cov}")
    for f in enumerate_primitive_polys(q, t):
        spec = LfsrSpec(q, f)
        cmap = runs_column_map(spec)
        arr = build_runs_ooa(spec)
        cov = coverage_ratio(arr)
        shared = f"  shared columns {sorted(cmap.collisions)}" if cmap.collisions else ""
        print(f"f={format_poly(f):<12} verify: {verify_ooa(arr)}   all t-sets: {cov}{shared}")
        assert cov.covered > rts_cov.covered


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
