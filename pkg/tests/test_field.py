import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfsrooa.field import (
    Poly,
    build_field,
    discrete_log,
    elem_arith,
    enumerate_primitive_polys,
    euler_phi,
    field_of_order,
    format_poly,
    hasse_coefficients,
    is_primitive_poly,
    parse_poly,
    poly_eval,
    prime_power,
    roots_with_multiplicity,
    trace_to_base,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def elems(q):
    return st.integers(min_value=0, max_value=q - 1)


@pytest.mark.parametrize("q,pn", [(2, (2, 1)), (9, (3, 2)), (16, (2, 4)), (125, (5, 3))])
def test_prime_power(q, pn):
    assert prime_power(q) == pn


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_not_prime_power(q):
    with pytest.raises(ValueError):
        field_of_order(q)


def test_gf4_multiplication():
    F = field_of_order(4)
    assert F.modulus == (1, 1, 1)
    # x = 2, x + 1 = 3; x^2 = x + 1
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.mul(3, 3) == 2
    assert F.add(2, 3) == 1


def test_canonical_moduli():
    assert build_field(2, 3).modulus == (1, 1, 0, 1)
    assert build_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert build_field(3, 2).modulus == (2, 1, 1)


@pytest.mark.parametrize("q", ORDERS)
def test_generator_has_full_order(q):
    F = field_of_order(q)
    powers = {F.exp(i) for i in range(q - 1)}
    assert powers == set(F.nonzero())
    for x in F.nonzero():
        assert F.exp(F.log(x)) == x
        assert discrete_log(F, x) == F.log(x)


@pytest.mark.parametrize("q", ORDERS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(elems(q)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b


@pytest.mark.parametrize("q", ORDERS)
def test_tables_match_scalar_ops(q):
    F = field_of_order(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.add_table[a, b] == F.add(a, b)
        assert F.mul_table[a, b] == F.mul(a, b)
        assert F.sub_table[a, b] == F.sub(a, b)
    assert F.inv_table[0] == 0
    assert all(F.inv_table[a] == F.inv(a) for a in F.nonzero())


def test_zero_has_no_inverse_or_log():
    F = field_of_order(5)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises((ValueError, ZeroDivisionError)):
        F.log(0)


def test_out_of_range_element():
    F = field_of_order(3)
    assert F.check(2) == 2
    with pytest.raises(ValueError):
        F.check(3)
    with pytest.raises(ValueError):
        elem_arith(F, "add", 3, 0)


def test_elem_arith_dispatch():
    F = field_of_order(7)
    assert elem_arith(F, "add", 5, 4) == 2
    assert elem_arith(F, "mul", 5, 4) == 6
    assert elem_arith(F, "inv", 3) == 5
    assert elem_arith(F, "pow", 3, 6) == 1
    with pytest.raises(ValueError):
        elem_arith(F, "frobnicate", 1)


@pytest.mark.parametrize("p,n,t", [(2, 1, 4), (3, 1, 3), (2, 2, 2), (2, 1, 6), (3, 1, 4)])
def test_subfield_embedding_and_trace(p, n, t):
    base = build_field(p, n)
    ext = build_field(p, n * t)
    emb = ext.embedding(base)
    # embedding is a ring homomorphism
    for a, b in itertools.product(base.elements(), repeat=2):
        assert ext.add(emb[a], emb[b]) == emb[base.add(a, b)]
        assert ext.mul(emb[a], emb[b]) == emb[base.mul(a, b)]
    # trace is F_q-linear and onto
    values = [trace_to_base(ext, base, x) for x in ext.elements()]
    assert set(values) == set(base.elements())
    counts = np.bincount(values, minlength=base.q)
    assert (counts == ext.q // base.q).all()


def test_poly_arithmetic():
    F = field_of_order(3)
    f = Poly(F, [1, 2])  # 1 + 2x
    g = Poly(F, [2, 0, 1])  # 2 + x^2
    assert (f * g).coeffs == (2, 1, 1, 2)
    assert (f + g).coeffs == (0, 2, 1)
    assert (f - f).is_zero and (f - f).degree == -1
    q, r = g.divmod_linear(1)  # x^2 + 2 = (x - 1)(x + 1) + 0
    assert r == 0 and q.coeffs == (1, 1)
    assert poly_eval(g, 2) == 0


def test_roots_with_multiplicity():
    F = field_of_order(3)
    # (x - 1)^2 = 1 + x + x^2 over F_3
    assert roots_with_multiplicity(Poly(F, [1, 1, 1])) == [(1, 2)]
    # 1 + 2x^2 = 2 (x - 1)(x - 2)
    assert roots_with_multiplicity(Poly(F, [1, 0, 2])) == [(1, 1), (2, 1)]


@settings(max_examples=40, deadline=None)
@given(coeffs=st.lists(elems(5), min_size=1, max_size=5), a=elems(5), x=elems(5))
def test_hasse_coefficients_reexpand(coeffs, a, x):
    F = field_of_order(5)
    g = Poly(F, coeffs)
    h = hasse_coefficients(g, a, len(coeffs))
    # g(x) = sum h_i (x - a)^i
    d = F.sub(x, a)
    acc = 0
    for i, hi in enumerate(h):
        acc = F.add(acc, F.mul(hi, F.pow(d, i)))
    assert acc == g(x)


def _naive_primitive(F, coeffs):
    # maximum period of the LFSR with this characteristic polynomial
    t = len(coeffs) - 1
    state = [0] * (t - 1) + [1]
    start = tuple(state)
    negc = [F.neg(c) for c in coeffs[:t]]
    for n in range(1, F.q**t):
        nxt = F.sum(F.mul(negc[j], state[j]) for j in range(t))
        state = state[1:] + [nxt]
        if tuple(state) == start:
            return n == F.q**t - 1
    return False


@pytest.mark.parametrize("q,t", [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)])
def test_primitivity_against_period_oracle(q, t):
    F = field_of_order(q)
    for low in itertools.product(range(q), repeat=t):
        coeffs = list(low) + [1]
        if coeffs[0] == 0:
            continue
        assert is_primitive_poly(F, coeffs) == _naive_primitive(F, coeffs), coeffs


@pytest.mark.parametrize(
    "q,t,count",
    [(2, 3, 2), (3, 3, 4), (5, 3, 20), (7, 3, 36), (2, 4, 2), (3, 4, 8), (5, 4, 48),
     (2, 5, 6), (3, 5, 22), (2, 6, 6), (3, 6, 48), (2, 7, 18)],
)
def test_primitive_counts(q, t, count):
    polys = enumerate_primitive_polys(q, t)
    assert len(polys) == count == euler_phi(q**t - 1) // t


def test_primitive_order_smallest_first():
    assert [p.coeffs for p in enumerate_primitive_polys(2, 3)] == [(1, 1, 0, 1), (1, 0, 1, 1)]
    assert enumerate_primitive_polys(2, 4)[0].coeffs == (1, 1, 0, 0, 1)


def test_poly_text_roundtrip():
    assert parse_poly("1,1,0,0,1") == [1, 1, 0, 0, 1]
    assert format_poly([2, 2, 0, 0, 1]) == "2,2,0,0,1"
