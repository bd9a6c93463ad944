import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ncbfree.cayley import SignedPermutation, group_elements, interval, omega, restricted_convolution
from ncbfree.cayley import GroupFunction, Permutation, identity
from ncbfree.errors import DomainError, NotInvertibleError, StructureError
from ncbfree.partitions import catalan, enumerate_nca, enumerate_ncb, kreweras, zero_block
from ncbfree.series import (
    DualScalar,
    SeriesA,
    SeriesB,
    boxconv_a,
    boxconv_a_dual,
    boxconv_b,
    boxconv_b_inverse,
    bridge_check_a,
    bridge_check_b,
    delta_a,
    delta_b,
    dual_mul,
    format_series,
    parse_series,
    random_series_a,
    random_series_b,
    series_to_json,
    u_alpha_a,
    u_alpha_b,
    w2_obstruction,
    zeta_b,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
duals = st.builds(DualScalar, fractions, fractions)


def series_a(order):
    return st.lists(fractions, min_size=order, max_size=order).map(SeriesA)


def series_b(order):
    return st.lists(duals, min_size=order, max_size=order).map(SeriesB)


def boxconv_oracle(alpha, beta, one):
    """Direct sum over NC(n) of products over p and its complement."""
    out = []
    for n in range(1, len(alpha) + 1):
        total = one - one
        for p in enumerate_nca(n):
            term = one
            for s in p.block_sizes():
                term = term * alpha[s - 1]
            for s in kreweras(p).block_sizes():
                term = term * beta[s - 1]
            total = total + term
        out.append(total)
    return out


# --- DualScalar ----------------------------------------------------------

def test_dual_examples():
    assert DualScalar(1, 0) * DualScalar(3, 4) == DualScalar(3, 4)
    assert DualScalar(0, 1) * DualScalar(0, 1) == DualScalar(0, 0)
    assert dual_mul(DualScalar(2, 3), DualScalar(4, 5)) == DualScalar(8, 22)


def test_dual_rejects_floats():
    with pytest.raises(StructureError):
        DualScalar(0.5, 0)


@settings(max_examples=100, deadline=None)
@given(duals, duals, duals)
def test_dual_ring_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x.prime:
        assert x * x.inverse() == DualScalar(1, 0)


def test_dual_not_invertible():
    with pytest.raises(NotInvertibleError):
        DualScalar(0, 1).inverse()


# --- type A --------------------------------------------------------------

def test_boxconv_a_low_order_formulas():
    rng = random.Random(5)
    for _ in range(10):
        a = random_series_a(3, rng)
        b = random_series_a(3, rng)
        g = boxconv_a(a, b)
        assert g[1] == a[1] * b[1]
        assert g[2] == a[2] * b[1] ** 2 + a[1] ** 2 * b[2]
        assert g[3] == a[3] * b[1] ** 3 + 3 * a[1] * a[2] * b[1] * b[2] + a[1] ** 3 * b[3]


def test_boxconv_a_catalan():
    ones = SeriesA([1] * 6)
    assert list(boxconv_a(ones, ones).coeffs) == [catalan(n) for n in range(1, 7)]


@settings(max_examples=30, deadline=None)
@given(series_a(5), series_a(5))
def test_boxconv_a_matches_oracle(a, b):
    assert list(boxconv_a(a, b).coeffs) == boxconv_oracle(a.coeffs, b.coeffs, Fraction(1))


@settings(max_examples=20, deadline=None)
@given(series_a(4), series_a(4), series_a(4))
def test_boxconv_a_associative_unital(a, b, c):
    assert boxconv_a(a, delta_a(4)) == a == boxconv_a(delta_a(4), a)
    assert boxconv_a(boxconv_a(a, b), c) == boxconv_a(a, boxconv_a(b, c))


def test_order_mismatch():
    with pytest.raises(DomainError):
        boxconv_a(SeriesA([1, 2]), SeriesA([1]))
    with pytest.raises(DomainError):
        boxconv_b(delta_b(2), delta_b(3))
    with pytest.raises(DomainError):
        boxconv_a_dual(delta_b(2), delta_b(3))


# --- dual type A and type B ---------------------------------------------

def test_boxconv_a_dual_examples():
    f = SeriesB([DualScalar(1, 1), DualScalar(0, 0)])
    g = SeriesB([DualScalar(1, 0), DualScalar(0, 0)])
    assert list(boxconv_a_dual(f, g).coeffs) == [DualScalar(1, 1), DualScalar(0, 0)]
    assert boxconv_a_dual(f, delta_b(2)) == f


@settings(max_examples=20, deadline=None)
@given(series_b(5), series_b(5))
def test_dual_first_components(f, g):
    assert boxconv_a_dual(f, g).prime() == boxconv_a(f.prime(), g.prime())
    assert list(boxconv_a_dual(f, g).coeffs) == boxconv_oracle(f.coeffs, g.coeffs, DualScalar(1, 0))


def test_boxconv_b_order_one():
    rng = random.Random(1)
    for _ in range(10):
        f, g = random_series_b(1, rng), random_series_b(1, rng)
        h = boxconv_b(f, g)[1]
        assert h.prime == f[1].prime * g[1].prime
        assert h.double_prime == f[1].double_prime * g[1].prime + f[1].prime * g[1].double_prime


@settings(max_examples=40, deadline=None)
@given(series_b(6), series_b(6))
def test_type_b_equals_dual_type_a(f, g):
    assert boxconv_b(f, g) == boxconv_a_dual(f, g)


@settings(max_examples=15, deadline=None)
@given(series_b(4), series_b(4), series_b(4))
def test_boxconv_b_associative_unital(f, g, h):
    assert boxconv_b(f, delta_b(4)) == f == boxconv_b(delta_b(4), f)
    assert boxconv_b(boxconv_b(f, g), h) == boxconv_b(f, boxconv_b(g, h))


@settings(max_examples=20, deadline=None)
@given(series_b(6), series_b(6), st.integers(1, 5))
def test_truncation_consistency(f, g, k):
    assert boxconv_b(f, g).truncate(k) == boxconv_b(f.truncate(k), g.truncate(k))


def test_counting_identities():
    N = 6
    unit = SeriesB([DualScalar(1, 0)] * N)
    h = boxconv_b(unit, unit)
    assert list(h.prime().coeffs) == [catalan(n) for n in range(1, N + 1)]
    assert all(c.double_prime == 0 for c in h.coeffs)
    mixed = boxconv_b(SeriesB([DualScalar(1, 1)] * N), unit)
    for n in range(1, N + 1):
        with_zero = sum(1 for pi in enumerate_ncb(n) if zero_block(pi) is not None)
        assert mixed[n].double_prime == with_zero == comb(2 * n, n) // 2


def test_inverse():
    assert boxconv_b_inverse(delta_b(4)) == delta_b(4)
    z = zeta_b(5)
    assert boxconv_b(z, boxconv_b_inverse(z)) == delta_b(5)
    rng = random.Random(2)
    for _ in range(5):
        f = random_series_b(5, rng, first=DualScalar(1, rng.randint(-3, 3)))
        inv = boxconv_b_inverse(f)
        assert boxconv_b(f, inv) == delta_b(5) == boxconv_b(inv, f)
    with pytest.raises(NotInvertibleError):
        boxconv_b_inverse(SeriesB([DualScalar(0, 1), DualScalar(1, 0)]))


# --- u functions ---------------------------------------------------------

def test_u_alpha_values():
    alpha = SeriesA([Fraction(2), Fraction(3), Fraction(5)])
    assert u_alpha_a(alpha, identity("S", 3)) == 8
    assert u_alpha_a(alpha, Permutation.from_cycles(3, [(1, 2)])) == 6
    b = SeriesB([DualScalar(2, 7), DualScalar(3, 11)])
    assert u_alpha_b(b, identity("W", 2)) == 4
    assert u_alpha_b(b, omega(2)) == 11


def test_u_alpha_multiplicative():
    rng = random.Random(9)
    alpha = random_series_b(3, rng)
    e = identity("W", 3)
    for s1 in interval(omega(3)):
        for s2 in interval(omega(3)):
            sup1 = {abs(x) for o in s1.orbits() if len(o) > 1 for x in o}
            sup2 = {abs(x) for o in s2.orbits() if len(o) > 1 for x in o}
            if sup1 & sup2:
                continue
            assert u_alpha_b(alpha, s1 * s2) * u_alpha_b(alpha, e) == u_alpha_b(alpha, s1) * u_alpha_b(alpha, s2)


def test_bridge_type_a():
    rng = random.Random(4)
    for _ in range(5):
        assert bridge_check_a(random_series_a(3, rng), random_series_a(3, rng), 3).holds


@pytest.mark.parametrize("n", [2, 3])
def test_bridge_type_b(n):
    rng = random.Random(n)
    for _ in range(5):
        rep = bridge_check_b(random_series_b(n, rng), random_series_b(n, rng), n)
        assert rep.holds and rep.checked == comb(2 * n, n)


def test_bridge_fails_off_interval():
    rng = random.Random(0)
    rep = bridge_check_b(random_series_b(2, rng, first=DualScalar(1, 1)),
                         random_series_b(2, rng, first=DualScalar(1, 1)), 2, on="group")
    assert not rep.holds


def test_w2_obstruction():
    rng = random.Random(12)
    alpha = random_series_b(2, rng)
    beta = random_series_b(2, rng)
    ua = GroupFunction.lazy("W", 2, lambda x: u_alpha_b(alpha, x))
    ub = GroupFunction.lazy("W", 2, lambda x: u_alpha_b(beta, x))
    assert w2_obstruction(ua) == 0
    conv = restricted_convolution(ua, ub)
    a1, a2, b1, b2 = alpha[1].prime, alpha[2].prime, beta[1].prime, beta[2].prime
    assert w2_obstruction(conv) == 2 * a1 ** 2 * b1 ** 2 * a2 * b2


# --- literals ------------------------------------------------------------

def test_parse_format():
    s = parse_series("[1, 3/2]")
    assert isinstance(s, SeriesA) and list(s.coeffs) == [1, Fraction(3, 2)]
    t = parse_series("[[1,0],[2,-1/3]]")
    assert isinstance(t, SeriesB) and t[2] == DualScalar(2, Fraction(-1, 3))
    assert parse_series(format_series(t)) == t
    assert parse_series(series_to_json(t)) == t
    assert format_series(s) == "[1,3/2]"


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(series_b))
def test_series_round_trip(f):
    assert parse_series(format_series(f)) == f
