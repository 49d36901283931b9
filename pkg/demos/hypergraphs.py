"""The LFSR array as a pullback along a hypergraph homomorphism.

Columns of the window array are indexed by powers of alpha, i.e. by points
of PG(t-1, q); a t-set of them is covered iff the points span.  The column
map of the construction is a homomorphism H_{t,q+1,t} -> PI_{t-1,q}, so
pulling the window array back along it yields an OOA.
"""

from lfsrooa.construct import build_runs_ooa
from lfsrooa.hyper import (
    build_H_tms,
    build_K_nt,
    build_PI,
    is_homomorphism,
    lawrence_map,
    pullback_voa,
    runs_vertex_map,
    subinterval_voa,
    verify_voa,
)
from lfsrooa.lfsr import LfsrSpec


def main():
    spec = LfsrSpec(2, [1, 1, 0, 0, 1])
    t, q = spec.t, spec.q
    G, H = build_H_tms(t, q + 1, t), build_PI(t - 1, q)
    print(G, H, f"{G.num_edges()} and {H.num_edges()} edges")

    f = runs_vertex_map(spec)
    for label in sorted(f):
        print(f"  {label} -> {f[label]}")
    print("homomorphism:", is_homomorphism(G, H, f))

    voa = subinterval_voa(spec)
    print("window array over PI:", verify_voa(voa, H))
    pulled = pullback_voa(voa, G, H, f)
    print("pullback over H:", verify_voa(pulled, G))
    print("same as the LFSR construction:", pulled.to_ooa(t, q + 1, t) == build_runs_ooa(spec))

    # an OOA of depth t folds into an ordinary OA on n = m*h + (t mod 2) columns
    law, n = lawrence_map(t, 3)
    print(f"H_{{{t},3,{t}}} -> K_{n}^{t}:", is_homomorphism(build_H_tms(t, 3, t), build_K_nt(n, t), law))


if __name__ == "__main__":
    main()
