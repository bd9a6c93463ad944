import itertools

import pytest

from ncbfree.cayley import SignedPermutation, interval, leq, word_length
from ncbfree.embed import (
    distinguished,
    gamma,
    iota,
    iota_gamma,
    iota_inverse,
    length_identity_holds,
    long_cycle,
    omega,
)
from ncbfree.errors import DomainError
from ncbfree.partitions import enumerate_nca, enumerate_ncb, kreweras, parse_partition


def test_distinguished_elements():
    d = distinguished(3)
    assert d.c(3) == 1 and d.c(1) == 2
    assert [d.omega(x) for x in (1, 2, 3, -1, -2, -3)] == [2, 3, -1, -2, -3, 1]
    assert [d.gamma(x) for x in (1, 2, 3, -3)] == [2, 3, 1, -1]


def test_iota_examples():
    p = parse_partition("{(1,2),(3,4)}")
    assert str(iota(p)) == "(1,2)(3,4)"
    assert iota(p).inverse() * long_cycle(4) == iota(kreweras(p))


@pytest.mark.parametrize("n", range(1, 6))
def test_iota_a_is_order_isomorphism(n):
    ps = list(enumerate_nca(n))
    images = [iota(p) for p in ps]
    assert set(images) == set(interval(long_cycle(n)))
    assert len(set(images)) == len(ps)
    for p, q in itertools.product(ps, repeat=2):
        assert (p <= q) == leq(iota(p), iota(q))


@pytest.mark.parametrize("n", range(1, 5))
def test_iota_b_is_order_isomorphism(n):
    ps = list(enumerate_ncb(n))
    images = [iota(p) for p in ps]
    assert set(images) == set(interval(omega(n)))
    assert len(set(images)) == len(ps)
    for p, q in itertools.product(ps, repeat=2):
        assert (p <= q) == leq(iota(p), iota(q))


def test_interval_w4_size():
    assert sum(1 for _ in interval(omega(4))) == 70


@pytest.mark.parametrize("n", range(1, 6))
def test_kreweras_equals_left_quotient(n):
    c = long_cycle(n)
    for p in enumerate_nca(n):
        assert iota(kreweras(p)) == iota(p).inverse() * c
    if n <= 4:
        w = omega(n)
        for pi in enumerate_ncb(n):
            assert iota(kreweras(pi)) == iota(pi).inverse() * w


@pytest.mark.parametrize("n", range(1, 5))
def test_length_identity(n):
    for pi in enumerate_ncb(n):
        assert length_identity_holds(pi)
        assert word_length(iota(pi)) + word_length(iota(kreweras(pi))) == n


@pytest.mark.parametrize("n", range(1, 5))
def test_gamma_interval(n):
    ps = list(enumerate_nca(n))
    images = {iota_gamma(p) for p in ps}
    assert images == set(interval(gamma(n)))
    for p in ps:
        assert iota_inverse(iota_gamma(p), target="gamma") == p
    assert leq(gamma(n), omega(n))


def test_iota_inverse_round_trip():
    for p in enumerate_nca(4):
        assert iota_inverse(iota(p)) == p
    for pi in enumerate_ncb(3):
        assert iota_inverse(iota(pi)) == pi


def test_iota_inverse_outside_interval():
    with pytest.raises(DomainError):
        iota_inverse(SignedPermutation.from_cycles(3, [(1, 3, 2), (-1, -3, -2)]))
    with pytest.raises(DomainError):
        iota_inverse(omega(2), target="gamma")
    with pytest.raises(DomainError):
        iota("{(1,2)}")
