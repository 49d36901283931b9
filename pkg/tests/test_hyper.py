import itertools

import numpy as np
import pytest

from lfsrooa.construct import build_rts_ooa, build_runs_ooa
from lfsrooa.field import enumerate_primitive_polys
from lfsrooa.hyper import (
    Hypergraph,
    Voa,
    build_H_tms,
    build_K_nt,
    build_LI,
    build_PI,
    complete_to_left_justified_map,
    compose,
    format_hypergraph,
    format_vertex_map,
    is_homomorphism,
    lawrence_map,
    mullen_schmid_maps,
    normalize_point,
    parse_hypergraph,
    parse_vertex_map,
    pi_to_li_map,
    pullback_voa,
    runs_vertex_map,
    subinterval_voa,
    verify_voa,
)
from lfsrooa.lfsr import LfsrSpec
from lfsrooa.ooa import read_ooa, verify_ooa


def test_left_justified_hypergraphs():
    assert build_H_tms(3, 3, 2).num_edges() == 7
    assert build_H_tms(3, 3, 3).num_edges() == 10
    # depth one is the complete hypergraph on the first column of each block
    H = build_H_tms(3, 5, 1)
    K = build_K_nt(5, 3)
    f = {(i, 1): i for i in range(1, 6)}
    assert is_homomorphism(H, K, f)
    assert H.num_edges() == K.num_edges()


def test_complete_hypergraphs():
    assert build_K_nt(3, 3).edges == [(1, 2, 3)]
    assert build_K_nt(4, 2).num_edges() == 6
    assert build_K_nt(9, 3).num_edges() == 84
    with pytest.raises(ValueError):
        build_K_nt(2, 3)


def test_edges_validated():
    with pytest.raises(ValueError):
        Hypergraph([1, 2, 3], 2, [(1, 1)])
    with pytest.raises(ValueError):
        Hypergraph([1, 2, 3], 2, [(1, 4)])


def test_independence_hypergraphs():
    LI = build_LI(2, 2)
    assert LI.edges == [((0, 1), (1, 0)), ((0, 1), (1, 1)), ((1, 0), (1, 1))]
    PI = build_PI(2, 2)
    assert len(PI.vertices) == 7
    assert PI.num_edges() == 28  # 35 triples less the 7 lines
    assert len(build_PI(2, 3).vertices) == 13


def test_normalize_point():
    from lfsrooa.field import field_of_order

    F = field_of_order(3)
    assert normalize_point((0, 2, 1), F) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0), F)


def test_homomorphism_checks():
    G = build_H_tms(3, 3, 2)
    ident = {v: v for v in G.vertices}
    assert is_homomorphism(G, G, ident)
    squash = dict(ident)
    squash[(1, 2)] = (1, 1)
    assert not is_homomorphism(G, G, squash)
    partial = dict(ident)
    del partial[(3, 2)]
    with pytest.raises(ValueError):
        is_homomorphism(G, G, partial)
    with pytest.raises(ValueError):
        is_homomorphism(G, build_K_nt(4, 2), ident)


@pytest.mark.parametrize("q,t", [(2, 3), (3, 3), (2, 4), (3, 4), (4, 3)])
def test_runs_vertex_map(q, t):
    G, H = build_H_tms(t, q + 1, t), build_PI(t - 1, q)
    for f in enumerate_primitive_polys(q, t):
        spec = LfsrSpec(q, f)
        fmap = runs_vertex_map(spec)
        assert is_homomorphism(G, H, fmap)
        voa = subinterval_voa(spec)
        assert verify_voa(voa, H).ok
        pulled = pullback_voa(voa, G, H, fmap)
        assert verify_voa(pulled, G).ok
        assert pulled.to_ooa(t, q + 1, t) == build_runs_ooa(spec)


def test_composition():
    # H_{t,m,t-1} -> H_{t,m,t} -> H_{t,m,t-1} and K_m^t -> H_{t,m,t} -> K_n^t
    for t, m in [(3, 3), (4, 5), (5, 6)]:
        up, down = mullen_schmid_maps(t, m)
        A, B = build_H_tms(t, m, t - 1), build_H_tms(t, m, t)
        assert is_homomorphism(A, B, up) and is_homomorphism(B, A, down)
        assert is_homomorphism(A, A, compose(up, down))
        law, n = lawrence_map(t, m)
        assert is_homomorphism(B, build_K_nt(n, t), law)
        simple = complete_to_left_justified_map(t, m)
        assert is_homomorphism(build_K_nt(m, t), B, simple)
        assert is_homomorphism(build_K_nt(m, t), build_K_nt(n, t), compose(simple, law))


def test_projective_into_linear():
    for d, q in [(2, 2), (2, 3), (3, 2)]:
        assert is_homomorphism(build_PI(d, q), build_LI(d + 1, q), pi_to_li_map(d, q))


@pytest.mark.parametrize("q,t", [(2, 3), (3, 3), (4, 3), (3, 4)])
def test_pullbacks_stay_valid(q, t):
    m = q + 1
    rts = Voa.from_ooa(build_rts_ooa(q, t))
    B = build_H_tms(t, m, t)
    # OOA -> OA on the first column of every block
    K = build_K_nt(m, t)
    oa = pullback_voa(rts, K, B, complete_to_left_justified_map(t, m))
    assert verify_voa(oa, K).ok
    # OA -> OOA with blocks borrowing columns
    h, odd = divmod(t, 2)
    mm = (m - odd) // h
    if mm >= 2:
        law, n = lawrence_map(t, mm)
        src = build_H_tms(t, mm, t)
        Kn = build_K_nt(n, t, vertices=list(range(1, n + 1)))
        oa_n = Voa(oa.rows[:, :n], list(range(1, n + 1)), q)
        assert verify_voa(oa_n, Kn).ok
        assert verify_voa(pullback_voa(oa_n, src, Kn, law), src).ok
    # depth t-1 and back, repeating columns
    up, down = mullen_schmid_maps(t, m)
    A = build_H_tms(t, m, t - 1)
    shallow = pullback_voa(rts, A, B, up)
    assert verify_voa(shallow, A).ok
    again = pullback_voa(shallow, B, A, down)
    assert verify_ooa(again.to_ooa(t, m, t)).ok


def test_pullback_identity(fig1_path):
    arr = read_ooa(fig1_path)
    G = build_H_tms(3, 3, 2)
    voa = Voa.from_ooa(arr)
    same = pullback_voa(voa, G, G, {v: v for v in G.vertices})
    assert np.array_equal(same.rows, arr.rows)
    assert verify_voa(voa, G).ok


def test_pullback_requires_homomorphism(fig1_path):
    G = build_H_tms(3, 3, 2)
    voa = Voa.from_ooa(read_ooa(fig1_path))
    bad = {v: (1, 1) for v in G.vertices}
    with pytest.raises(ValueError):
        pullback_voa(voa, G, G, bad)


def test_random_array_fails_complete():
    rng = np.random.default_rng(7)
    voa = Voa(rng.integers(0, 2, size=(8, 6)), list(range(1, 7)), 2)
    assert not verify_voa(voa, build_K_nt(6, 3)).ok


def test_perturbed_arrays_fail_both_ways():
    # if the pulled-back OA fails, the OOA it came from fails as well
    q, t = 3, 3
    m = q + 1
    arr = build_rts_ooa(q, t)
    B, K = build_H_tms(t, m, t), build_K_nt(m, t)
    simple = complete_to_left_justified_map(t, m)
    rng = np.random.default_rng(0)
    seen = 0
    for _ in range(20):
        rows = arr.rows.copy()
        r, c = rng.integers(arr.N), rng.integers(m) * t
        rows[r, c] = (rows[r, c] + 1) % q
        voa = Voa(rows, arr.labels, q)
        oa = pullback_voa(voa, K, B, simple)
        if not verify_voa(oa, K).ok:
            seen += 1
            assert not verify_voa(voa, B).ok
    assert seen > 0


def test_text_formats():
    G = build_H_tms(3, 3, 2)
    back = parse_hypergraph(format_hypergraph(G))
    assert back.vertices == G.vertices and back.edges == G.edges and back.t == 3
    f = {v: v for v in G.vertices}
    assert parse_vertex_map(format_vertex_map(f)) == f
    P = build_PI(2, 2)
    assert parse_hypergraph(format_hypergraph(P)).edges == P.edges
    with pytest.raises(ValueError):
        parse_hypergraph("hypergraph t=2 n=3\nvertices:\n1\n2\nedges:\n1 2\n")
    with pytest.raises(ValueError):
        parse_vertex_map("(1,1) (1,2)\n")


def test_edge_batches():
    LI = build_LI(3, 2)
    cands = [((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (1, 0, 0), (0, 0, 1)), ((1, 1, 0), (0, 1, 1), (1, 0, 1))]
    assert LI.has_edges(cands).tolist() == [True, False, False]
    brute = sum(1 for e in itertools.combinations(LI.vertices, 3) if LI.has_edge(e))
    assert LI.num_edges() == brute == 28
