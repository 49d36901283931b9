"""Ordered orthogonal arrays: data model, verification and coverage census.

An OOA_lambda(N; t, m, s, v) is an N x ms array whose columns are labelled by
(i, j) in [m] x [s] and in which every left-justified set of t columns shows
each t-tuple exactly lambda times.  A set L is left-justified when
(i, j) in L with j > 1 implies (i, j-1) in L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np

from .field import FieldSpec, field_of_order
from .linalg import batch_full_rank, rank, row_reduce

__all__ = [
    "OoaArray",
    "CoverageReport",
    "Table1Row",
    "left_justified_sets",
    "is_lambda_covered",
    "verify_ooa",
    "coverage_ratio",
    "covered_iff_rank",
    "generator_matrix",
    "table1_stats",
    "max_columns_bound",
    "format_ooa",
    "parse_ooa",
    "read_ooa",
    "write_ooa",
]

Label = tuple[int, int]

_CHUNK = 1 << 22


@dataclass
class OoaArray:
    """An N x (m*s) array with declared OOA parameters.

    Column ``(i-1)*s + (j-1)`` carries the label ``(i, j)``.
    """

    rows: np.ndarray
    t: int
    m: int
    s: int
    v: int
    lam: int = 1

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=np.int64)
        if self.rows.ndim != 2 or self.rows.shape[1] != self.m * self.s:
            raise ValueError(
                f"expected {self.m * self.s} columns, got shape {self.rows.shape}"
            )
        if self.rows.shape[0] != self.lam * self.v**self.t:
            raise ValueError(
                f"N={self.rows.shape[0]} != lambda * v^t = {self.lam * self.v**self.t}"
            )
        if self.rows.size and (self.rows.min() < 0 or self.rows.max() >= self.v):
            raise ValueError(f"symbols must lie in [0, {self.v})")

    @property
    def N(self) -> int:
        return self.rows.shape[0]

    @property
    def labels(self) -> list[Label]:
        return [(i, j) for i in range(1, self.m + 1) for j in range(1, self.s + 1)]

    def col(self, label: Label) -> int:
        i, j = label
        if not (1 <= i <= self.m and 1 <= j <= self.s):
            raise KeyError(label)
        return (i - 1) * self.s + (j - 1)

    def columns(self, labels) -> np.ndarray:
        return self.rows[:, [self.col(lb) for lb in labels]]

    def sorted_rows(self) -> np.ndarray:
        return self.rows[np.lexsort(self.rows.T[::-1])]

    def __eq__(self, other) -> bool:
        if not isinstance(other, OoaArray):
            return NotImplemented
        return (self.t, self.m, self.s, self.v, self.lam) == (
            other.t,
            other.m,
            other.s,
            other.v,
            other.lam,
        ) and np.array_equal(self.rows, other.rows)


@dataclass
class CoverageReport:
    total: int
    covered: int
    failures: list = field(default_factory=list)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.covered, self.total) if self.total else Fraction(1)

    @property
    def ok(self) -> bool:
        return self.covered == self.total

    def __str__(self) -> str:
        return f"covered={self.covered} total={self.total} ratio={float(self.ratio):.6f}"

    def format(self, with_failures: bool = False) -> str:
        lines = [str(self)]
        if with_failures:
            for cols in self.failures:
                lines.append("uncovered " + " ".join(_fmt_label(c) for c in cols))
        return "\n".join(lines)


def _fmt_label(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def left_justified_sets(m: int, s: int, t: int) -> list[tuple[Label, ...]]:
    """All left-justified t-subsets of [m] x [s].

    Each set is a prefix of length d_i of block i with sum(d_i) = t.
    """
    if not 1 <= t <= m * s:
        raise ValueError("need 1 <= t <= m*s")
    out = []
    for depths in itertools.product(range(s + 1), repeat=m):
        if sum(depths) != t:
            continue
        out.append(
            tuple((i + 1, j + 1) for i, d in enumerate(depths) for j in range(d))
        )
    out.sort()
    return out


def _covered_batch(rows: np.ndarray, combos: np.ndarray, v: int, lam: int) -> np.ndarray:
    """Brute-force tuple counting for a batch of column subsets."""
    N = rows.shape[0]
    t = combos.shape[1]
    weights = v ** np.arange(t, dtype=np.int64)
    expected = np.repeat(np.arange(v**t, dtype=np.int64), lam)
    if expected.size != N:
        return np.zeros(len(combos), dtype=bool)
    out = np.empty(len(combos), dtype=bool)
    step = max(1, _CHUNK // max(N * t, 1))
    for lo in range(0, len(combos), step):
        part = combos[lo : lo + step]
        codes = np.einsum("nbt,t->nb", rows[:, part], weights)
        codes.sort(axis=0)
        out[lo : lo + step] = (codes == expected[:, None]).all(axis=0)
    return out


def is_lambda_covered(array: OoaArray, cols, lam: int | None = None) -> bool:
    """Brute force: every t-tuple appears exactly lambda times in ``cols``."""
    lam = array.lam if lam is None else lam
    cols = list(cols)
    if len(cols) != array.t:
        raise ValueError(f"expected {array.t} columns, got {len(cols)}")
    idx = np.array([[array.col(c) for c in cols]])
    return bool(_covered_batch(array.rows, idx, array.v, lam)[0])


def verify_ooa(array: OoaArray) -> CoverageReport:
    """Check every left-justified t-set; failures list the uncovered ones."""
    sets = left_justified_sets(array.m, array.s, array.t)
    idx = np.array([[array.col(c) for c in L] for L in sets])
    ok = _covered_batch(array.rows, idx, array.v, array.lam)
    failures = [L for L, good in zip(sets, ok) if not good]
    return CoverageReport(len(sets), int(ok.sum()), failures)


def generator_matrix(array: OoaArray, F: FieldSpec | None = None) -> np.ndarray | None:
    """A t x ms matrix G whose row space is exactly the set of rows.

    Returns None when the rows are not a t-dimensional F_v-subspace.
    """
    if array.lam != 1:
        return None
    try:
        F = F or field_of_order(array.v)
    except ValueError:
        return None
    reduced, pivots = row_reduce(array.rows, F)
    if len(pivots) != array.t:
        return None
    if len(np.unique(array.rows, axis=0)) != array.N:
        return None
    return reduced[: array.t]


def covered_iff_rank(vectors, F: FieldSpec | int) -> bool:
    """True iff the t given vectors in F_q^t are linearly independent."""
    F = F if isinstance(F, FieldSpec) else field_of_order(F)
    mat = np.asarray(vectors, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("expected t vectors of length t")
    return rank(mat, F) == mat.shape[0]


def _all_combos(n: int, t: int) -> np.ndarray:
    it = itertools.chain.from_iterable(itertools.combinations(range(n), t))
    return np.fromiter(it, dtype=np.int64, count=comb(n, t) * t).reshape(-1, t)


def _rank_covered(G: np.ndarray, combos: np.ndarray, F: FieldSpec) -> np.ndarray:
    out = np.empty(len(combos), dtype=bool)
    step = 1 << 17
    for lo in range(0, len(combos), step):
        part = combos[lo : lo + step]
        mats = np.transpose(G[:, part], (1, 2, 0))
        out[lo : lo + step] = batch_full_rank(mats, F)
    return out


def coverage_ratio(array: OoaArray, t: int | None = None, method: str = "auto") -> CoverageReport:
    """Census over all C(ms, t) column subsets, left-justified or not.

    ``method`` is "brute" (tuple counting), "rank" (linear arrays only:
    a subset is covered iff its generator columns are independent) or
    "auto" (rank when the array is linear, brute otherwise).
    """
    t = array.t if t is None else t
    n = array.m * array.s
    combos = _all_combos(n, t)
    if array.N != array.v**t:
        return CoverageReport(len(combos), 0)
    G = None
    if method in ("rank", "auto") and t == array.t:
        G = generator_matrix(array)
        if G is None and method == "rank":
            raise ValueError("rank census needs a linear array with lambda = 1")
    if G is not None:
        ok = _rank_covered(G, combos, field_of_order(array.v))
    elif method in ("brute", "auto"):
        ok = _covered_batch(array.rows, combos, array.v, 1)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoverageReport(len(combos), int(ok.sum()))


@dataclass
class Table1Row:
    q: int
    t: int
    runs: list[Fraction]
    rts: Fraction

    @property
    def count_f(self) -> int:
        return len(self.runs)

    @property
    def runs_min(self) -> Fraction:
        return min(self.runs)

    @property
    def runs_max(self) -> Fraction:
        return max(self.runs)

    @property
    def runs_avg(self) -> Fraction:
        return sum(self.runs, Fraction(0)) / len(self.runs)

    def __str__(self) -> str:
        return (
            f"t={self.t} q={self.q} #f={self.count_f} "
            f"min={float(self.runs_min):.6f} max={float(self.runs_max):.6f} "
            f"avg={float(self.runs_avg):.6f} rts={float(self.rts):.6f}"
        )


def table1_stats(q: int, t: int) -> Table1Row:
    """Coverage ratios of the LFSR construction over every primitive
    polynomial of degree t over F_q, next to the Reed-Solomon (RTS) array."""
    from .construct import build_rts_ooa, build_runs_ooa
    from .field import enumerate_primitive_polys
    from .lfsr import LfsrSpec

    F = field_of_order(q)
    ratios = []
    for f in enumerate_primitive_polys(F, t):
        arr = build_runs_ooa(LfsrSpec(F, f), verify=False)
        ratios.append(coverage_ratio(arr).ratio)
    rts = coverage_ratio(build_rts_ooa(q, t, verify=False)).ratio
    return Table1Row(q, t, ratios, rts)


def max_columns_bound(q: int, t: int) -> dict[str, int]:
    """Upper bounds on OA columns and on m for OOAs built from (n, t)-sets.

    ``oa_bound``: most columns of an OA(q^t; t, n, q).  ``ntset_m_bound``:
    largest m reachable from an (n, t)-set in F_q^t.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if q <= t:
        oa = t + 1
    elif 3 <= t < q and q % 2 == 1:
        oa = q + t - 2
    else:
        oa = q + t - 1
    return {"oa_bound": oa, "ntset_m_bound": q // (t // 2) + 1}


# -- text format --------------------------------------------------------------


def format_ooa(array: OoaArray) -> str:
    lines = [
        f"ooa t={array.t} m={array.m} s={array.s} v={array.v} "
        f"lambda={array.lam} rows={array.N}",
        " ".join(_fmt_label(lb) for lb in array.labels),
    ]
    lines.extend(" ".join(map(str, row)) for row in array.rows.tolist())
    return "\n".join(lines) + "\n"


def parse_ooa(text: str) -> OoaArray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("ooa "):
        raise ValueError("missing 'ooa' header line")
    header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    try:
        t, m, s, v = (int(header[key]) for key in ("t", "m", "s", "v"))
        lam = int(header.get("lambda", 1))
        n_rows = int(header["rows"])
    except KeyError as exc:
        raise ValueError(f"header is missing {exc}") from None
    labels = lines[1].split()
    expected = [f"({i},{j})" for i in range(1, m + 1) for j in range(1, s + 1)]
    if labels != expected:
        raise ValueError("column labels must be [m] x [s] in row-major order")
    body = [list(map(int, ln.split())) for ln in lines[2:]]
    if len(body) != n_rows:
        raise ValueError(f"header says {n_rows} rows, found {len(body)}")
    rows = np.array(body, dtype=np.int64).reshape(n_rows, m * s)
    return OoaArray(rows, t=t, m=m, s=s, v=v, lam=lam)


def read_ooa(path) -> OoaArray:
    return parse_ooa(Path(path).read_text())


def write_ooa(array: OoaArray, path) -> None:
    Path(path).write_text(format_ooa(array))
