"""Maximum-period LFSR sequences over F_q and the run-shift machinery.

A sequence is generated by a primitive characteristic polynomial

    f(x) = c_0 + c_1 x + ... + c_{t-1} x^{t-1} + x^t

and a nonzero seed (b_0, ..., b_{t-1}) through a_i = -sum_j c_j a_{i-t+j}.
All positions are cyclic modulo the period q^t - 1.

Counting back k_beta positions, where alpha^{k_beta} (alpha - beta) = 1, maps
the sequence to a_{i+1} - beta a_i.  That one identity drives everything
else here: shrinking and growing runs, the root-multiplicity count of
:func:`z_count`, and the pairing of zero runs with nonzero runs.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .field import FieldSpec, Poly, build_field, field_of_order, is_primitive_poly

__all__ = [
    "LfsrSpec",
    "LfsrSequence",
    "Run",
    "generate_period",
    "gamma_of_seed",
    "generate_by_trace",
    "find_runs",
    "run_census",
    "expected_run_census",
    "zero_positions",
    "k_beta",
    "shift_identity_check",
    "theorem1_polynomial",
    "z_count",
    "shrink_run",
    "grow_zero_run",
    "run_bijection",
    "subinterval_array",
    "power_vector",
]


class LfsrSpec:
    """A primitive characteristic polynomial over F_q together with a seed.

    ``poly`` is the full monic coefficient list of f, constant term first
    (``[1, 1, 0, 0, 1]`` is 1 + x + x^4).  The seed defaults to the impulse
    (0, ..., 0, 1).
    """

    def __init__(self, field: FieldSpec | int, poly, seed=None):
        F = field if isinstance(field, FieldSpec) else field_of_order(field)
        if isinstance(poly, Poly):
            poly = poly.coeffs
        poly = tuple(F.check(int(c)) for c in poly)
        t = len(poly) - 1
        if t < 1 or poly[-1] != 1:
            raise ValueError("characteristic polynomial must be monic of degree >= 1")
        if not is_primitive_poly(F, poly):
            raise ValueError(f"{poly} is not primitive over GF({F.q})")
        if seed is None:
            seed = (0,) * (t - 1) + (1,)
        seed = tuple(F.check(int(b)) for b in seed)
        if len(seed) != t:
            raise ValueError(f"seed must have length {t}")
        if not any(seed):
            raise ValueError("seed must be nonzero")

        self.field = F
        self.poly = poly
        self.c = poly[:t]
        self.t = t
        self.seed = seed
        self.ext = build_field(F.p, F.n * t)
        self.embed = self.ext.embedding(F)
        self.alpha = self._find_alpha()

    def __repr__(self) -> str:
        return f"LfsrSpec(q={self.q}, poly={self.poly}, seed={self.seed})"

    def __eq__(self, other) -> bool:
        return isinstance(other, LfsrSpec) and (self.field, self.poly, self.seed) == (
            other.field,
            other.poly,
            other.seed,
        )

    def __hash__(self) -> int:
        return hash((self.field, self.poly, self.seed))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def period(self) -> int:
        return self.q**self.t - 1

    @property
    def k(self) -> int:
        """Window length (q^t - 1) / (q - 1)."""
        return self.period // (self.q - 1)

    def with_seed(self, seed) -> "LfsrSpec":
        return LfsrSpec(self.field, self.poly, seed)

    def _find_alpha(self) -> int:
        E = self.ext
        if self.field.n == 1 and self.poly == E.modulus:
            return E.alpha
        coeffs = [self.embed[c] for c in self.poly]
        for x in E.nonzero():
            acc = 0
            for c in reversed(coeffs):
                acc = E.add(E.mul(acc, x), c)
            if acc == 0:
                return x
        raise RuntimeError("primitive polynomial has no root in its splitting field")

    @functools.cached_property
    def trace_table(self) -> list[int]:
        """Tr(x) as an F_q code for every code x of F_{q^t}."""
        E, q = self.ext, self.q
        proj = E.project(self.field)
        out = []
        for x in E.elements():
            s, y = 0, x
            for _ in range(self.t):
                s = E.add(s, y)
                y = E.pow(y, q)
            out.append(proj[s])
        return out

    def alpha_power(self, k: int) -> int:
        return self.ext.pow(self.alpha, k)

    @functools.cached_property
    def _log_alpha_scale(self) -> int:
        return pow(self.ext.log(self.alpha), -1, self.period)

    def log_alpha(self, x: int) -> int:
        """Discrete logarithm of ``x`` to the base alpha."""
        return self.ext.log(x) * self._log_alpha_scale % self.period


@dataclass(frozen=True)
class Run:
    """Maximal constant cyclic subinterval: ``length`` copies of ``symbol``."""

    start: int
    symbol: int
    length: int


class LfsrSequence:
    """One full period of an LFSR sequence; indexing wraps around."""

    __slots__ = ("symbols", "q")

    def __init__(self, symbols, q: int):
        self.symbols = tuple(int(s) for s in symbols)
        self.q = q

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i % len(self.symbols)]

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        if isinstance(other, LfsrSequence):
            return self.symbols == other.symbols
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"LfsrSequence({str(self)!r}, q={self.q})"

    def __str__(self) -> str:
        if self.q <= 9:
            return "".join(map(str, self.symbols))
        return " ".join(map(str, self.symbols))

    def window(self, start: int, length: int) -> tuple[int, ...]:
        return tuple(self[start + j] for j in range(length))

    def as_array(self) -> np.ndarray:
        return np.array(self.symbols, dtype=np.int64)

    def least_period(self) -> int:
        n = len(self.symbols)
        for d in range(1, n + 1):
            if n % d == 0 and self.symbols[d:] + self.symbols[:d] == self.symbols:
                return d
        return n


def generate_period(spec: LfsrSpec) -> LfsrSequence:
    F, t = spec.field, spec.t
    negc = [F.neg(c) for c in spec.c]
    a = list(spec.seed)
    for i in range(t, spec.period):
        s = 0
        for j in range(t):
            if negc[j]:
                s = F.add(s, F.mul(negc[j], a[i - t + j]))
        a.append(s)
    return LfsrSequence(a, F.q)


def gamma_of_seed(spec: LfsrSpec) -> int:
    """The unique gamma in F_{q^t} with b_i = Tr(gamma alpha^i), i < t."""
    E, tr = spec.ext, spec.trace_table
    powers = [spec.alpha_power(i) for i in range(spec.t)]
    for gamma in E.nonzero():
        if all(tr[E.mul(gamma, pw)] == b for pw, b in zip(powers, spec.seed)):
            return gamma
    raise RuntimeError("no gamma reproduces the seed")


def generate_by_trace(spec: LfsrSpec) -> LfsrSequence:
    """Generate the period as a_i = Tr(gamma alpha^i)."""
    E, tr = spec.ext, spec.trace_table
    gamma = gamma_of_seed(spec)
    la = E.log(spec.alpha)
    lg = E.log(gamma)
    return LfsrSequence(
        [tr[E.exp(lg + i * la)] for i in range(spec.period)], spec.q
    )


def find_runs(seq: LfsrSequence) -> list[Run]:
    """All maximal constant cyclic runs, ordered by start position."""
    n = len(seq)
    s = seq.symbols
    starts = [i for i in range(n) if s[i] != s[i - 1]]
    if not starts:
        raise ValueError("constant sequence has no bounded runs")
    runs = []
    for a, b in zip(starts, starts[1:] + [starts[0] + n]):
        runs.append(Run(a, s[a], b - a))
    return runs


def run_census(seq: LfsrSequence) -> Counter:
    """Count runs by ``(symbol, length)``."""
    return Counter((r.symbol, r.length) for r in find_runs(seq))


def expected_run_census(q: int, t: int) -> Counter:
    """Run counts of any maximum-period sequence of degree t over F_q.

    Lengths up to t-2 occur (q-1)^2 q^(t-l-2) times per symbol; length t-1
    occurs q-2 times per nonzero symbol and q-1 times for zero; each nonzero
    symbol has one run of length t and zero has none.
    """
    out = Counter()
    for delta in range(q):
        for length in range(1, t - 1):
            out[(delta, length)] = (q - 1) ** 2 * q ** (t - length - 2)
        if t >= 2:
            out[(delta, t - 1)] = q - 1 if delta == 0 else q - 2
        if delta:
            out[(delta, t)] = 1
    return +out


def zero_positions(seq: LfsrSequence, start: int, window: int | None = None) -> list[int]:
    """Offsets of zeroes inside the window of length ``window`` at ``start``.

    ``window`` defaults to k = (q^t - 1) / (q - 1).
    """
    if window is None:
        window = len(seq) // (seq.q - 1)
    return [j for j in range(window) if seq[start + j] == 0]


def k_beta(spec: LfsrSpec, beta: int, modulo_k: bool = False) -> int:
    """The exponent with alpha^k (alpha - beta) = 1, modulo q^t - 1 (or k)."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    E = spec.ext
    diff = E.sub(spec.alpha, spec.embed[spec.field.check(beta)])
    kb = -spec.log_alpha(diff) % spec.period
    return kb % spec.k if modulo_k else kb


def shift_identity_check(spec: LfsrSpec, seq: LfsrSequence, beta: int) -> bool:
    """True iff a_{i+1} - beta a_i == a_{i - k_beta} at every index."""
    F = spec.field
    kb = k_beta(spec, beta)
    return all(
        F.sub(seq[i + 1], F.mul(beta, seq[i])) == seq[i - kb] for i in range(len(seq))
    )


def _check_zero_run(seq: LfsrSequence, n: int, l: int, t: int) -> None:
    if not 0 <= l <= t - 1:
        raise ValueError(f"run length {l} outside [0, {t - 1}]")
    if l == 0:
        if seq[n] == 0:
            raise ValueError(f"position {n} holds a zero; not an empty zero run")
        return
    if seq[n - 1] == 0 or seq[n + l] == 0 or any(seq[n + j] for j in range(l)):
        raise ValueError(f"no run of zeroes of length {l} at position {n}")


def theorem1_polynomial(spec: LfsrSpec, seq: LfsrSequence, n: int, l: int) -> Poly:
    """P(x) = sum_j c_{j+l+1} sum_{i<=j} a_{n+l+j-i} x^i, with c_t = 1.

    ``C_n^l`` must be a run of zeroes of length ``l``; ``l = 0`` stands for
    the empty run in front of a nonzero ``a_n``.  Each beta in F_q^x is a
    root of P exactly as many times as :func:`z_count` reports.
    """
    F, t = spec.field, spec.t
    _check_zero_run(seq, n, l, t)
    c = spec.poly
    deg = t - l - 1
    coeffs = []
    for i in range(deg + 1):
        acc = 0
        for j in range(i, deg + 1):
            acc = F.add(acc, F.mul(c[j + l + 1], seq[n + l + j - i]))
        coeffs.append(acc)
    return Poly(F, coeffs)


def z_count(spec: LfsrSpec, seq: LfsrSequence, n: int, l: int, beta: int) -> int:
    """Largest z with a_{n + j k_beta} = 0 for j = 1..z, by direct scan."""
    _check_zero_run(seq, n, l, spec.t)
    kb = k_beta(spec, beta)
    z = 0
    while seq[n + (z + 1) * kb] == 0:
        z += 1
        if z > len(seq):
            raise RuntimeError("shift orbit is entirely zero")
    return z


def _run_at(seq: LfsrSequence, pos: int) -> Run | None:
    pos %= len(seq)
    if seq[pos - 1] == seq[pos]:
        return None
    length = 1
    while length < len(seq) and seq[pos + length] == seq[pos]:
        length += 1
    return Run(pos, seq[pos], length)


def shrink_run(spec: LfsrSpec, seq: LfsrSequence, run: Run, beta: int) -> Run | None:
    """Count back k_beta from a run of delta's of length l.

    The result is the run of delta (1 - beta)'s of length l - 1 found there,
    or None when l == 1.
    """
    F = spec.field
    pos = (run.start - k_beta(spec, beta)) % len(seq)
    if run.length == 1:
        return None
    found = _run_at(seq, pos)
    expected = F.mul(run.symbol, F.sub(1, beta))
    if found is None or found.symbol != expected or found.length != run.length - 1:
        raise RuntimeError(f"no shrunken run at {pos} for {run}")
    return found


def grow_zero_run(spec: LfsrSpec, seq: LfsrSequence, run: Run, beta: int) -> tuple[int, ...]:
    """The window of length l+1 found k_beta after a zero run of length l.

    It always has the shape (a, beta a, beta^2 a, ..., beta^l a).
    """
    if run.symbol != 0:
        raise ValueError("growth applies to runs of zeroes")
    pos = run.start + k_beta(spec, beta)
    return seq.window(pos, run.length + 1)


def run_bijection(spec: LfsrSpec, seq: LfsrSequence, l: int) -> list[tuple[Run, Run]]:
    """Pair each zero run of length l with a nonzero run longer than l.

    Starting from a zero run, step forward by k_1 while the runs keep
    growing as zero runs; the first nonzero run reached is the partner.
    Raises RuntimeError if the pairing is not a bijection.
    """
    t = spec.t
    if not 1 <= l <= t - 1:
        raise ValueError(f"l must lie in [1, {t - 1}]")
    k1 = k_beta(spec, 1)
    runs = find_runs(seq)
    pairs = []
    for run in runs:
        if run.symbol != 0 or run.length != l:
            continue
        pos, length = run.start, l
        while True:
            pos = (pos + k1) % len(seq)
            length += 1
            nxt = _run_at(seq, pos)
            if nxt is None or nxt.length != length:
                raise RuntimeError(f"broken growth chain from {run}")
            if nxt.symbol != 0:
                pairs.append((run, nxt))
                break
    targets = [b for _, b in pairs]
    expected = {r for r in runs if r.symbol != 0 and r.length > l}
    if len(set(targets)) != len(targets) or set(targets) != expected:
        raise RuntimeError("zero runs and long nonzero runs are not in bijection")
    return pairs


def subinterval_array(spec: LfsrSpec, seq: LfsrSequence | None = None) -> np.ndarray:
    """The q^t x k array of all length-k windows of one period plus a zero row."""
    if seq is None:
        seq = generate_period(spec)
    P, k = spec.period, spec.k
    idx = (np.arange(P)[:, None] + np.arange(k)[None, :]) % P
    M = seq.as_array()[idx]
    return np.vstack([M, np.zeros((1, k), dtype=M.dtype)])


def power_vector(spec: LfsrSpec, c: int) -> tuple[int, ...]:
    """F_q-coordinates (Tr(alpha^(c+i)))_{i<t} of alpha^c.

    The trace form is nondegenerate, so this is a linear isomorphism from
    F_{q^t} onto F_q^t; linear (in)dependence of powers of alpha can be read
    off these vectors.
    """
    tr = spec.trace_table
    return tuple(tr[spec.alpha_power(c + i)] for i in range(spec.t))
