"""Finite fields GF(p^n) and polynomials over them.

Elements are plain integers.  The base-p digits of a code are the coefficients
of the element in the power basis of the modulus root, constant term in the
least significant digit.  Code 0 is zero and code 1 is one.

Extension fields keep exp/log tables plus a Zech table for addition, so every
operation is a couple of table lookups.  Prime fields use modular arithmetic.
"""

from __future__ import annotations

import functools

import numpy as np

__all__ = [
    "FieldSpec",
    "Poly",
    "build_field",
    "field_of_order",
    "elem_arith",
    "trace_to_base",
    "discrete_log",
    "poly_eval",
    "roots_with_multiplicity",
    "hasse_coefficients",
    "is_primitive_poly",
    "enumerate_primitive_polys",
    "prime_factors",
    "euler_phi",
    "format_poly",
    "parse_poly",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, n


def _digits(code: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        code, d = divmod(code, p)
        out.append(d)
    return out


def _undigits(digits, p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _power_walk(p: int, modulus: tuple[int, ...]):
    """Yield the codes of x^0, x^1, ... in F_p[x]/(modulus)."""
    n = len(modulus) - 1
    state = [1] + [0] * (n - 1)
    while True:
        yield _undigits(state, p)
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [(s - top * c) % p for s, c in zip(state, modulus)]


class FieldSpec:
    """The field GF(p^n) defined by a primitive modulus over F_p.

    Instances are immutable by convention; use :func:`build_field` to get the
    canonical (cached) instance for a given ``(p, n)``.
    """

    def __init__(self, p: int, n: int, modulus):
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus

        order = self.q - 1
        exp = np.zeros(2 * order, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        walk = _power_walk(p, modulus)
        for k in range(order):
            code = next(walk)
            if log[code] >= 0:
                raise ValueError("modulus is not primitive")
            exp[k] = exp[k + order] = code
            log[code] = k
        if next(walk) != 1:
            raise ValueError("modulus is not primitive")
        self._exp = exp
        self._log = log
        self._exp_list = exp[:order].tolist()
        self._log_list = log.tolist()
        if p != 2 and n > 1:
            # zech[k] = log(1 + alpha^k), -1 when the sum vanishes
            zech = []
            for k in range(order):
                d = _digits(self._exp_list[k], p, n)
                d[0] = (d[0] + 1) % p
                zech.append(self._log_list[_undigits(d, p)])
            self._zech = zech

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    @property
    def is_prime(self) -> bool:
        return self.n == 1

    @property
    def alpha(self) -> int:
        """Code of the modulus root, a generator of the multiplicative group."""
        return self._exp_list[1 % (self.q - 1)] if self.q > 2 else 1

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log_list[a], self._log_list[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp_list[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.n == 1:
            return self.p - a
        return self._exp_list[(self._log_list[a] + (self.q - 1) // 2) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.n == 1:
            return a * b % self.p
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_list[-self._log_list[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp_list[self._log_list[a] * e % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("discrete log of zero is undefined")
        return self._log_list[a]

    def exp(self, k: int) -> int:
        """alpha ** k."""
        return self._exp_list[k % (self.q - 1)]

    def sum(self, values) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` (k * 1) in the field."""
        return k % self.p

    # -- vectorised tables for small fields --------------------------------

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        return np.array(
            [[self.add(a, b) for b in range(self.q)] for a in range(self.q)],
            dtype=np.int64,
        )

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        return np.array(
            [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)],
            dtype=np.int64,
        )

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        # inv(0) is set to 0 so that masked lanes of batched code stay in range
        return np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)

    @functools.cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    # -- subfields ---------------------------------------------------------

    def embedding(self, base: "FieldSpec") -> list[int]:
        """Codes in ``self`` of the elements of the subfield ``base``.

        ``base`` must be GF(p^m) with m dividing ``self.n``.  The map sends the
        modulus root of ``base`` to the smallest-code root of that modulus in
        ``self``, which fixes one field isomorphism deterministically.
        """
        return list(_embedding(self, base))

    def project(self, base: "FieldSpec") -> dict[int, int]:
        """Inverse of :meth:`embedding`: subfield code in self -> code in base."""
        return {c: i for i, c in enumerate(_embedding(self, base))}


@functools.lru_cache(maxsize=None)
def _embedding(ext: FieldSpec, base: FieldSpec) -> tuple[int, ...]:
    if base.p != ext.p or ext.n % base.n:
        raise ValueError(f"GF({base.q}) is not a subfield of GF({ext.q})")
    if base.n == 1:
        return tuple(range(base.p))
    theta = None
    for x in ext.nonzero():
        # evaluate the base modulus (coefficients in F_p) at x
        acc = 0
        for c in reversed(base.modulus):
            acc = ext.add(ext.mul(acc, x), ext.from_int(c))
        if acc == 0:
            theta = x
            break
    if theta is None:
        raise RuntimeError("no root of the subfield modulus found")
    powers = [ext.pow(theta, i) for i in range(base.n)]
    out = []
    for code in range(base.q):
        d = _digits(code, base.p, base.n)
        out.append(ext.sum(ext.mul(ext.from_int(di), pw) for di, pw in zip(d, powers)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def build_field(p: int, n: int = 1) -> FieldSpec:
    """GF(p^n) with the smallest primitive modulus.

    Moduli are ordered by their packed integer code (base-p digits, constant
    term least significant), so for GF(16) the modulus is 1 + x + x^4.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be >= 1")
    for low in range(p**n):
        modulus = tuple(_digits(low, p, n)) + (1,)
        if modulus[0] == 0:
            continue
        if _walk_is_primitive(p, modulus):
            return FieldSpec(p, n, modulus)
    raise RuntimeError(f"no primitive polynomial of degree {n} over F_{p}")


def _walk_is_primitive(p: int, modulus) -> bool:
    order = p ** (len(modulus) - 1) - 1
    walk = _power_walk(p, modulus)
    next(walk)
    for k in range(1, order + 1):
        if next(walk) == 1:
            return k == order
    return False


def field_of_order(q: int) -> FieldSpec:
    return build_field(*prime_power(q))


def elem_arith(field: FieldSpec, op: str, *args) -> int:
    """Dispatch ``op`` in {add, neg, sub, mul, inv, div, pow} on ``field``.

    Unlike the bare methods, operands are range-checked here.
    """
    try:
        fn = {
            "add": field.add,
            "neg": field.neg,
            "sub": field.sub,
            "mul": field.mul,
            "inv": field.inv,
            "div": field.div,
            "pow": field.pow,
        }[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    if op == "pow":
        base, e = args
        return fn(field.check(base), int(e))
    return fn(*(field.check(a) for a in args))


def discrete_log(field: FieldSpec, x: int) -> int:
    return field.log(x)


def trace_to_base(ext: FieldSpec, base_q: int | FieldSpec, x: int) -> int:
    """Tr(x) = x + x^q + ... + x^(q^(t-1)), returned as a code of F_q."""
    base = base_q if isinstance(base_q, FieldSpec) else field_of_order(base_q)
    q = base.q
    t = 0
    size = 1
    while size < ext.q:
        size *= q
        t += 1
    if size != ext.q or base.p != ext.p:
        raise ValueError(f"GF({ext.q}) is not an extension of GF({q})")
    s = 0
    y = x
    for _ in range(t):
        s = ext.add(s, y)
        y = ext.pow(y, q)
    return ext.project(base)[s]


class Poly:
    """A polynomial over a FieldSpec, coefficients constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        coeffs = [field.check(int(c)) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self.coeffs)} over GF({self.field.q}))"

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def _same(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Poly(F, [F.add(x, y) for x, y in zip(a, b)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def divmod_linear(self, root: int) -> tuple["Poly", int]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        F = self.field
        if self.is_zero():
            return Poly(F), 0
        acc = 0
        quot = []
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, root), c)
            quot.append(acc)
        rem = quot.pop()
        return Poly(F, reversed(quot)), rem

    @classmethod
    def linear(cls, field: FieldSpec, root: int) -> "Poly":
        """x - root."""
        return cls(field, [field.neg(root), 1])


def poly_eval(f: Poly, x: int) -> int:
    F = f.field
    F.check(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def roots_with_multiplicity(f: Poly) -> list[tuple[int, int]]:
    """Roots of ``f`` in its coefficient field with their multiplicities."""
    if f.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    out = []
    for beta in f.field.elements():
        g, e = f, 0
        while True:
            quot, rem = g.divmod_linear(beta)
            if rem != 0 or g.degree < 1:
                break
            g, e = quot, e + 1
        if e:
            out.append((beta, e))
    return out


def hasse_coefficients(g: Poly, a: int, t: int | None = None) -> list[int]:
    """Coefficients of g(x + a), i.e. the Hasse derivatives of g at a.

    The list is padded with zeros to length ``t`` (default: deg g + 1).
    """
    F = g.field
    F.check(a)
    if t is None:
        t = max(len(g.coeffs), 1)
    if len(g.coeffs) > t:
        raise ValueError("deg g must be < t")
    # repeated synthetic division by (x - a) yields the Taylor coefficients
    out = []
    cur = g
    for _ in range(t):
        cur, rem = cur.divmod_linear(a)
        out.append(rem)
    return out


# -- polynomial arithmetic modulo f on raw code lists -----------------------


def _mulmod(F: FieldSpec, a: list[int], b: list[int], f: tuple[int, ...]) -> list[int]:
    t = len(f) - 1
    prod = [0] * (2 * t - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    # f is monic: x^t = -(f_0 + ... + f_{t-1} x^{t-1})
    for d in range(len(prod) - 1, t - 1, -1):
        top = prod[d]
        if top == 0:
            continue
        prod[d] = 0
        for j in range(t):
            if f[j]:
                prod[d - t + j] = F.sub(prod[d - t + j], F.mul(top, f[j]))
    return prod[:t]


def _powmod_x(F: FieldSpec, e: int, f: tuple[int, ...]) -> list[int]:
    t = len(f) - 1
    result = [1] + [0] * (t - 1)
    base = [0] * t
    if t == 1:
        base = [F.neg(f[0])]
    else:
        base[1] = 1
    while e:
        if e & 1:
            result = _mulmod(F, result, base, f)
        base = _mulmod(F, base, base, f)
        e >>= 1
    return result


def is_primitive_poly(field_q: FieldSpec, coeffs) -> bool:
    """True iff the monic polynomial ``coeffs`` is primitive over ``field_q``.

    ``coeffs`` is a Poly or a code list, constant term first.  The test checks
    that x has multiplicative order exactly q^t - 1 modulo f; a reducible f
    has a unit group smaller than that, so irreducibility comes for free.
    """
    if isinstance(coeffs, Poly):
        coeffs = coeffs.coeffs
    f = tuple(field_q.check(int(c)) for c in coeffs)
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 1")
    if f[0] == 0:
        return False
    t = len(f) - 1
    order = field_q.q**t - 1
    one = [1] + [0] * (t - 1)
    if _powmod_x(field_q, order, f) != one:
        return False
    return all(_powmod_x(field_q, order // r, f) != one for r in prime_factors(order))


def _poly_key(coeffs, q: int) -> int:
    return _undigits(coeffs, q)


def enumerate_primitive_polys(q: int | FieldSpec, t: int) -> list[Poly]:
    """All monic primitive polynomials of degree t over F_q.

    Ordered by packed code (constant term least significant), the same order
    :func:`build_field` uses to pick its modulus.
    """
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    out = []
    for low in range(F.q**t):
        coeffs = _digits(low, F.q, t) + [1]
        if coeffs[0] and is_primitive_poly(F, coeffs):
            out.append(Poly(F, coeffs))
    return out


def euler_phi(n: int) -> int:
    out = n
    for r in prime_factors(n):
        out -= out // r
    return out


def format_poly(coeffs) -> str:
    if isinstance(coeffs, Poly):
        coeffs = coeffs.coeffs
    return ",".join(str(int(c)) for c in coeffs)


def parse_poly(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
