"""OOA(t, q+1, t, q) constructions.

``build_runs_ooa`` picks (q+1)t columns of the subinterval array of a
primitive polynomial: the first 2t columns split into a reversed and a
forward block, and for each beta in F_q^x the columns t + j*k_beta (mod k),
j = 1..t, form one more block.

``build_rts_ooa`` is the Reed-Solomon array in the NRT metric: rows are the
polynomials g of degree < t, one block per field point a holding the Taylor
coefficients of g at a, and a block for the point at infinity holding the
coefficients of g from the top down.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .field import FieldSpec, Poly, field_of_order, hasse_coefficients
from .lfsr import (
    LfsrSpec,
    gamma_of_seed,
    generate_period,
    k_beta,
    subinterval_array,
)
from .ooa import OoaArray, verify_ooa

__all__ = [
    "ColumnMap",
    "XSet",
    "runs_column_map",
    "build_runs_ooa",
    "build_rts_ooa",
    "x_set",
    "x_set_array",
]


@dataclass(frozen=True)
class ColumnMap:
    """OOA column label (i, j) -> column index of the subinterval array."""

    entries: dict
    k: int

    def __getitem__(self, label) -> int:
        return self.entries[label]

    def __len__(self) -> int:
        return len(self.entries)

    def labels(self) -> list:
        return sorted(self.entries)

    def columns(self) -> list[int]:
        return [self.entries[lb] for lb in self.labels()]

    @property
    def collisions(self) -> dict[int, list]:
        """Column indices claimed by more than one label."""
        seen = defaultdict(list)
        for lb in self.labels():
            seen[self.entries[lb]].append(lb)
        return {c: lbs for c, lbs in seen.items() if len(lbs) > 1}

    @property
    def is_injective(self) -> bool:
        return not self.collisions


def runs_column_map(spec: LfsrSpec) -> ColumnMap:
    """Column assignment of the LFSR construction.

    Beta blocks are assigned in ascending code order.  Indices are reduced
    mod k.  A reduced index may coincide with another label's index; every
    such coincidence seen so far pairs labels that never share a
    left-justified t-set, and :func:`build_runs_ooa` verifies the result.
    """
    t, q, k = spec.t, spec.q, spec.k
    if t < 3:
        raise ValueError("the construction needs t >= 3")
    entries = {}
    for j in range(1, t + 1):
        entries[(1, j)] = t - j
        entries[(2, j)] = t + j - 1
    for i, beta in enumerate(range(1, q), start=3):
        kb = k_beta(spec, beta)
        for j in range(1, t + 1):
            entries[(i, j)] = (t + j * kb) % k
    return ColumnMap(entries, k)


def build_runs_ooa(spec: LfsrSpec, verify: bool = True) -> OoaArray:
    cmap = runs_column_map(spec)
    M = subinterval_array(spec, generate_period(spec))
    arr = OoaArray(M[:, cmap.columns()], t=spec.t, m=spec.q + 1, s=spec.t, v=spec.q)
    if verify:
        report = verify_ooa(arr)
        if not report.ok:
            raise RuntimeError(f"construction failed verification: {report}")
    return arr


def _all_polys(F: FieldSpec, t: int):
    # code order: constant term is the least significant digit
    for digits in itertools.product(range(F.q), repeat=t):
        yield Poly(F, digits[::-1])


def build_rts_ooa(q: int | FieldSpec, t: int, verify: bool = True) -> OoaArray:
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    if t < 2:
        raise ValueError("t must be >= 2")
    rows = []
    for g in _all_polys(F, t):
        row = []
        for a in F.elements():
            row.extend(hasse_coefficients(g, a, t))
        coeffs = list(g.coeffs) + [0] * (t - len(g.coeffs))
        row.extend(coeffs[::-1])
        rows.append(row)
    arr = OoaArray(np.array(rows), t=t, m=F.q + 1, s=t, v=F.q)
    if verify:
        report = verify_ooa(arr)
        if not report.ok:
            raise RuntimeError(f"RTS array failed verification: {report}")
    return arr


@dataclass(frozen=True)
class XSet:
    """Seed vectors T_j = (Tr(alpha^(v+j+i)))_{i<t} for the used columns j."""

    v_exponent: int
    labels: tuple
    columns: tuple
    vectors: tuple

    def __len__(self) -> int:
        return len(self.vectors)


def x_set(spec: LfsrSpec) -> XSet:
    cmap = runs_column_map(spec)
    v = spec.log_alpha(gamma_of_seed(spec))
    tr = spec.trace_table
    labels = tuple(cmap.labels())
    cols = tuple(cmap[lb] for lb in labels)
    vectors = tuple(
        tuple(tr[spec.alpha_power(v + j + i)] for i in range(spec.t)) for j in cols
    )
    return XSet(v, labels, cols, vectors)


def x_set_array(spec: LfsrSpec, xs: XSet | None = None) -> OoaArray:
    """The array whose columns are full periods seeded by each T_j, plus a zero row."""
    xs = xs or x_set(spec)
    cols = [generate_period(spec.with_seed(T)).as_array() for T in xs.vectors]
    body = np.column_stack(cols)
    rows = np.vstack([body, np.zeros((1, body.shape[1]), dtype=body.dtype)])
    return OoaArray(rows, t=spec.t, m=spec.q + 1, s=spec.t, v=spec.q)
