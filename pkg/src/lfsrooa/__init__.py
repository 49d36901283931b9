"""Ordered orthogonal arrays OOA(t, q+1, t, q) from LFSR sequences.

Submodules: ``field`` (GF(p^n) arithmetic, primitive polynomials), ``lfsr``
(m-sequences, runs and their shifts), ``ooa`` (arrays, verification and
coverage census), ``construct`` (the LFSR and Reed-Solomon constructions),
``hyper`` (hypergraph homomorphisms and VOA pullback) and ``cli``.
"""

from .construct import build_rts_ooa, build_runs_ooa, runs_column_map
from .field import FieldSpec, Poly, build_field, enumerate_primitive_polys, field_of_order
from .hyper import Hypergraph, Voa, is_homomorphism, pullback_voa, verify_voa
from .lfsr import LfsrSequence, LfsrSpec, generate_period, k_beta
from .ooa import (
    CoverageReport,
    OoaArray,
    coverage_ratio,
    read_ooa,
    table1_stats,
    verify_ooa,
    write_ooa,
)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "Poly",
    "build_field",
    "field_of_order",
    "enumerate_primitive_polys",
    "LfsrSpec",
    "LfsrSequence",
    "generate_period",
    "k_beta",
    "OoaArray",
    "CoverageReport",
    "verify_ooa",
    "coverage_ratio",
    "table1_stats",
    "read_ooa",
    "write_ooa",
    "runs_column_map",
    "build_runs_ooa",
    "build_rts_ooa",
    "Hypergraph",
    "Voa",
    "is_homomorphism",
    "pullback_voa",
    "verify_voa",
]
