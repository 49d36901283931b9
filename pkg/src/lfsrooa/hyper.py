"""Uniform hypergraphs, homomorphisms and variable strength orthogonal arrays.

A VOA(N; G, v) is an N x |V(G)| array, columns labelled by the vertices of
G, in which every hyperedge's columns are lambda-covered.  If H carries a
VOA and f: G -> H is a homomorphism (edges go to edges of the same size),
copying column f(g) into position g yields a VOA over G.

Builders cover the hypergraphs used in the OOA literature: the left-justified
hypergraph H_{t,m,s}, complete hypergraphs K_n^t, and the linear and
projective independence hypergraphs LI_{d,q} and PI_{d,q}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from pathlib import Path

import numpy as np

from .construct import runs_column_map
from .field import FieldSpec, field_of_order
from .lfsr import LfsrSpec, generate_period, power_vector, subinterval_array
from .linalg import batch_full_rank, rank
from .ooa import CoverageReport, OoaArray, _covered_batch, left_justified_sets

__all__ = [
    "Hypergraph",
    "Voa",
    "build_H_tms",
    "build_K_nt",
    "build_LI",
    "build_PI",
    "normalize_point",
    "is_homomorphism",
    "compose",
    "pullback_voa",
    "verify_voa",
    "runs_vertex_map",
    "subinterval_voa",
    "pi_to_li_map",
    "complete_to_left_justified_map",
    "lawrence_map",
    "mullen_schmid_maps",
    "format_hypergraph",
    "parse_hypergraph",
    "format_vertex_map",
    "parse_vertex_map",
    "read_hypergraph",
    "read_vertex_map",
]


class Hypergraph:
    """A t-uniform hypergraph.

    Edges are either listed explicitly, implied (every t-subset, for complete
    hypergraphs), or defined by linear independence of the vertex vectors
    over a field.  The last two are only enumerated on demand.
    """

    def __init__(self, vertices, t: int, edges=None, *, complete=False, field=None, name=""):
        self.vertices = tuple(vertices)
        self.t = t
        self.name = name
        self._vset = frozenset(self.vertices)
        if len(self._vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        self._complete = complete
        self._field = field
        self._edges = None
        if edges is not None:
            es = set()
            for e in edges:
                key = tuple(sorted(e))
                if len(set(key)) != t or not self._vset.issuperset(key):
                    raise ValueError(f"bad edge {e}")
                es.add(key)
            self._edges = es

    def __repr__(self) -> str:
        label = self.name or "Hypergraph"
        return f"<{label}: t={self.t}, |V|={len(self.vertices)}>"

    @property
    def edges(self) -> list[tuple]:
        if self._edges is None:
            combos = list(itertools.combinations(sorted(self.vertices), self.t))
            keep = self.has_edges(combos)
            self._edges = {e for e, ok in zip(combos, keep) if ok}
        return sorted(self._edges)

    def num_edges(self) -> int:
        if self._complete and self._edges is None:
            return comb(len(self.vertices), self.t)
        return len(self.edges)

    def has_edge(self, e) -> bool:
        return bool(self.has_edges([e])[0])

    def has_edges(self, candidates) -> np.ndarray:
        """Vectorised membership test for a batch of vertex sets."""
        out = np.zeros(len(candidates), dtype=bool)
        keys = []
        where = []
        for n, e in enumerate(candidates):
            key = tuple(e)
            if len(set(key)) == self.t and self._vset.issuperset(key):
                keys.append(key)
                where.append(n)
        if not keys:
            return out
        if self._edges is not None:
            out[where] = [tuple(sorted(k)) in self._edges for k in keys]
        elif self._complete:
            out[where] = True
        elif self._field is not None:
            mats = np.array(keys, dtype=np.int64)
            out[where] = batch_full_rank(mats, self._field)
        else:
            raise RuntimeError("hypergraph has no edge description")
        return out

    def __contains__(self, e) -> bool:
        return self.has_edge(e)


@dataclass
class Voa:
    """An array whose columns are labelled by hypergraph vertices."""

    rows: np.ndarray
    labels: tuple
    v: int

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=np.int64)
        self.labels = tuple(self.labels)
        if self.rows.shape[1] != len(self.labels):
            raise ValueError("one label per column required")
        self._index = {lb: i for i, lb in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate column labels")

    def col(self, label) -> int:
        return self._index[label]

    def column(self, label) -> np.ndarray:
        return self.rows[:, self._index[label]]

    @classmethod
    def from_ooa(cls, array: OoaArray) -> "Voa":
        return cls(array.rows, array.labels, array.v)

    def to_ooa(self, t: int, m: int, s: int, lam: int = 1) -> OoaArray:
        order = [self._index[(i, j)] for i in range(1, m + 1) for j in range(1, s + 1)]
        return OoaArray(self.rows[:, order], t=t, m=m, s=s, v=self.v, lam=lam)


# -- builders -------------------------------------------------------------------


def build_H_tms(t: int, m: int, s: int) -> Hypergraph:
    vertices = [(i, j) for i in range(1, m + 1) for j in range(1, s + 1)]
    return Hypergraph(vertices, t, left_justified_sets(m, s, t), name=f"H_{{{t},{m},{s}}}")


def build_K_nt(n: int, t: int, vertices=None) -> Hypergraph:
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    vertices = list(range(1, n + 1)) if vertices is None else list(vertices)
    if len(vertices) != n:
        raise ValueError(f"expected {n} vertices")
    return Hypergraph(vertices, t, complete=True, name=f"K_{n}^{t}")


def normalize_point(vec, F: FieldSpec) -> tuple[int, ...]:
    """Scale a nonzero vector so that its first nonzero coordinate is 1."""
    vec = tuple(int(x) for x in vec)
    lead = next((x for x in vec if x), 0)
    if lead == 0:
        raise ValueError("the zero vector is not a projective point")
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in vec)


def build_LI(d: int, q: int) -> Hypergraph:
    """Vertices F_q^d; edges are the linearly independent d-subsets."""
    F = field_of_order(q)
    vertices = list(itertools.product(range(q), repeat=d))
    return Hypergraph(vertices, d, field=F, name=f"LI_{{{d},{q}}}")


def build_PI(d: int, q: int) -> Hypergraph:
    """Points of PG(d, q); edges are (d+1)-subsets spanning the space."""
    F = field_of_order(q)
    vertices = sorted(
        {normalize_point(v, F) for v in itertools.product(range(q), repeat=d + 1) if any(v)}
    )
    return Hypergraph(vertices, d + 1, field=F, name=f"PI_{{{d},{q}}}")


# -- homomorphisms ----------------------------------------------------------------


def is_homomorphism(G: Hypergraph, H: Hypergraph, f) -> bool:
    """True iff every edge of G maps onto an edge of H of the same size."""
    if G.t != H.t:
        raise ValueError("hypergraphs must have the same uniformity")
    missing = [v for v in G.vertices if v not in f]
    if missing:
        raise ValueError(f"vertex map is not total: {missing[:3]} unmapped")
    images = []
    for e in G.edges:
        img = [f[v] for v in e]
        if len(set(img)) != len(e):
            return False
        images.append(img)
    return bool(H.has_edges(images).all()) if images else True


def compose(f, g) -> dict:
    """The map v -> g[f[v]]."""
    return {v: g[w] for v, w in f.items()}


def pullback_voa(voa: Voa, G: Hypergraph, H: Hypergraph, f, check: bool = True) -> Voa:
    """Column g of the result is column f(g) of ``voa``."""
    if check and not is_homomorphism(G, H, f):
        raise ValueError("vertex map is not a homomorphism G -> H")
    cols = [voa.col(f[g]) for g in G.vertices]
    return Voa(voa.rows[:, cols], G.vertices, voa.v)


def verify_voa(array: Voa, G: Hypergraph, v: int | None = None, lam: int | None = None) -> CoverageReport:
    """Check that the columns of every edge of G are lambda-covered."""
    v = array.v if v is None else v
    if lam is None:
        lam, rem = divmod(array.rows.shape[0], v**G.t)
        if rem or lam == 0:
            edges = G.edges
            return CoverageReport(len(edges), 0, list(edges))
    edges = G.edges
    if not edges:
        return CoverageReport(0, 0)
    idx = np.array([[array.col(x) for x in e] for e in edges], dtype=np.int64)
    ok = _covered_batch(array.rows, idx, v, lam)
    return CoverageReport(len(edges), int(ok.sum()), [e for e, good in zip(edges, ok) if not good])


# -- specific maps and arrays ---------------------------------------------------------


def runs_vertex_map(spec: LfsrSpec) -> dict:
    """H_{t,q+1,t} -> PI_{t-1,q}: label (i, j) -> projective point of alpha^column."""
    cmap = runs_column_map(spec)
    return {lb: normalize_point(power_vector(spec, cmap[lb]), spec.field) for lb in cmap.labels()}


def subinterval_voa(spec: LfsrSpec) -> Voa:
    """The subinterval array as a VOA over PI_{t-1,q}: column c <-> point of alpha^c."""
    M = subinterval_array(spec, generate_period(spec))
    labels = [normalize_point(power_vector(spec, c), spec.field) for c in range(spec.k)]
    return Voa(M, labels, spec.q)


def pi_to_li_map(d: int, q: int) -> dict:
    """Each projective point goes to its normalised representative vector."""
    return {p: p for p in build_PI(d, q).vertices}


def complete_to_left_justified_map(t: int, m: int) -> dict:
    """K_m^t -> H_{t,m,t}: i -> (i, 1)."""
    return {i: (i, 1) for i in range(1, m + 1)}


def lawrence_map(t: int, m: int) -> tuple[dict, int]:
    """A homomorphism H_{t,m,t} -> K_n^t with n = m*h + (t mod 2), h = t // 2.

    Block i owns h columns.  Depths beyond h borrow the columns of block
    i+1 (cyclically) from the top down; at most one block of a
    left-justified t-set is deeper than h, and the blocks it borrows from
    are then too shallow to collide.  Odd t adds one shared column for
    depth h+1.
    """
    if m < 2 or t < 2:
        raise ValueError("need m >= 2 and t >= 2")
    h, odd = divmod(t, 2)

    def own(i, j):
        return (i - 1) * h + j

    n = m * h + odd
    f = {}
    for i in range(1, m + 1):
        nxt = i % m + 1
        for j in range(1, t + 1):
            if j <= h:
                f[(i, j)] = own(i, j)
            elif odd and j == h + 1:
                f[(i, j)] = n
            else:
                r = j - h - odd
                f[(i, j)] = own(nxt, h + 1 - r)
    return f, n


def mullen_schmid_maps(t: int, m: int) -> tuple[dict, dict]:
    """Homomorphisms H_{t,m,t-1} -> H_{t,m,t} -> H_{t,m,t-1}.

    The first is inclusion; the second fixes (i, j) for j < t and sends
    (i, t) to (i+1, 1) cyclically, i.e. it repeats a column.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    up = {(i, j): (i, j) for i in range(1, m + 1) for j in range(1, t)}
    down = {}
    for i in range(1, m + 1):
        for j in range(1, t):
            down[(i, j)] = (i, j)
        down[(i, t)] = (i % m + 1, 1)
    return up, down


# -- text formats -------------------------------------------------------------------


def _fmt(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def _parse(token: str):
    token = token.strip()
    if token.startswith("(") and token.endswith(")"):
        inner = token[1:-1]
        return tuple(int(x) for x in inner.split(",")) if inner else ()
    try:
        return int(token)
    except ValueError:
        return token


def format_hypergraph(G: Hypergraph) -> str:
    lines = [f"hypergraph t={G.t} n={len(G.vertices)}", "vertices:"]
    lines.extend(_fmt(v) for v in G.vertices)
    lines.append("edges:")
    lines.extend(" ".join(_fmt(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("hypergraph"):
        raise ValueError("missing 'hypergraph' header")
    header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    t, n = int(header["t"]), int(header["n"])
    try:
        vi, ei = lines.index("vertices:"), lines.index("edges:")
    except ValueError:
        raise ValueError("missing 'vertices:' or 'edges:' marker") from None
    vertices = [_parse(ln) for ln in lines[vi + 1 : ei]]
    if len(vertices) != n:
        raise ValueError(f"header says {n} vertices, found {len(vertices)}")
    edges = [tuple(_parse(tok) for tok in ln.split()) for ln in lines[ei + 1 :]]
    return Hypergraph(vertices, t, edges)


def format_vertex_map(f) -> str:
    return "".join(f"{_fmt(src)} -> {_fmt(dst)}\n" for src, dst in f.items())


def parse_vertex_map(text: str) -> dict:
    out = {}
    for ln in text.splitlines():
        if not ln.strip():
            continue
        src, sep, dst = ln.partition("->")
        if not sep:
            raise ValueError(f"bad map line {ln!r}")
        out[_parse(src)] = _parse(dst)
    return out


def read_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def read_vertex_map(path) -> dict:
    return parse_vertex_map(Path(path).read_text())
