import itertools
import random
from collections import deque
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncbfree.cayley import (
    GroupFunction,
    Permutation,
    SignedPermutation,
    compose,
    cover_case,
    covers,
    covers_metric,
    cycle_factorization_a,
    cycle_factorization_b,
    gamma,
    generators,
    group_elements,
    identity,
    interval,
    interval_factorize,
    is_generator,
    leq,
    long_cycle,
    omega,
    orbit_census,
    parse_permutation,
    permutation_from_json,
    permutation_to_json,
    format_permutation,
    predicted_interval_size,
    restricted_convolution,
    word_length,
)
from ncbfree.errors import DomainError, StructureError


def S(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def W(n, *cycles):
    return SignedPermutation.from_cycles(n, cycles)


def reflections(group, n):
    """Generators written out by hand, independent of the library's shape test."""
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if group == "S":
            out.append(S(n, (i, j)))
        else:
            out.append(W(n, (i, j), (-i, -j)))
            out.append(W(n, (i, -j), (-i, j)))
    if group == "W":
        out.extend(W(n, (i, -i)) for i in range(1, n + 1))
    return out


def bfs_distances(group, n):
    gens = reflections(group, n)
    e = identity(group, n)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for r in gens:
            y = x * r
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# --- elements ------------------------------------------------------------

def test_composition_convention():
    assert S(4, (1, 2), (3, 4)) * long_cycle(4) == S(4, (2, 4))


def test_signed_consistency_enforced():
    with pytest.raises(StructureError):
        SignedPermutation.from_mapping(2, {1: 2, 2: 1, -1: -1, -2: -2})


def test_mismatched_groups():
    with pytest.raises(DomainError):
        compose(identity("S", 2), identity("W", 2))
    with pytest.raises(DomainError):
        compose(identity("S", 2), identity("S", 3))


def test_group_orders():
    assert sum(1 for _ in group_elements("S", 4)) == 24
    assert sum(1 for _ in group_elements("W", 3)) == 48


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["S", "W"]), st.integers(1, 5), st.randoms(use_true_random=False))
def test_group_axioms(group, n, rnd):
    elems = list(group_elements(group, min(n, 3 if group == "W" else 5)))
    a, b, c = (rnd.choice(elems) for _ in range(3))
    e = identity(group, a.n)
    assert a * e == e * a == a
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == e


# --- length -------------------------------------------------------------

def test_length_examples():
    assert word_length(identity("S", 3)) == 0
    assert word_length(identity("W", 3)) == 0
    assert word_length(S(6, (1, 3, 4), (2, 6))) == 3
    assert word_length(W(2, (1, -1), (2, -2))) == 2


@pytest.mark.parametrize("group,n", [("S", 3), ("S", 4), ("W", 2), ("W", 3)])
def test_length_is_graph_distance(group, n):
    dist = bfs_distances(group, n)
    assert len(dist) == sum(1 for _ in group_elements(group, n))
    for x, d in dist.items():
        assert word_length(x) == d


@pytest.mark.parametrize("group,n", [("S", 4), ("W", 2)])
def test_length_axioms_exhaustive(group, n):
    elems = list(group_elements(group, n))
    for a in elems:
        assert word_length(a.inverse()) == word_length(a)
        for b in elems:
            assert word_length(a * b) <= word_length(a) + word_length(b)
            assert word_length(b.inverse() * a * b) == word_length(a)


@pytest.mark.parametrize("group,n", [("S", 4), ("S", 3), ("W", 2), ("W", 3)])
def test_generators_match_hand_list(group, n):
    assert set(generators(group, n)) == set(reflections(group, n))
    for x in group_elements(group, n):
        assert is_generator(x) == (x in set(reflections(group, n)))


# --- order and covers ---------------------------------------------------

def test_order_examples():
    assert leq(gamma(2), omega(2))
    assert omega(2) == gamma(2) * W(2, (2, -2))
    for b in group_elements("W", 2):
        assert leq(identity("W", 2), b)


def test_order_monotone_in_length():
    for a, b in itertools.product(list(group_elements("S", 4)), repeat=2):
        if leq(a, b):
            assert word_length(a) <= word_length(b)


@pytest.mark.parametrize("group,n", [("S", 3), ("S", 4), ("W", 2), ("W", 3)])
def test_cover_cases_agree_with_metric(group, n):
    elems = list(group_elements(group, n))
    counts = {}
    for a, b in itertools.product(elems, repeat=2):
        case = cover_case(a, b)
        assert (case is not None) == covers_metric(a, b) == covers(a, b)
        if case:
            counts[case] = counts.get(case, 0) + 1
    if group == "W":
        assert set(counts) == {"a", "b", "c", "d"}


def test_generators_cover_identity():
    for group, n in (("S", 4), ("W", 3)):
        e = identity(group, n)
        assert all(covers(e, r) for r in generators(group, n))


def test_case_d_structure():
    # a has the non-invariant pair X = (1,-2), -X = (-1,2); (1,2)(-1,-2) splits them
    a = W(2, (1, -2), (-1, 2))
    b = a * W(2, (1, 2), (-1, -2))
    assert cover_case(a, b) == "d"
    assert {frozenset(o) for o in b.orbits()} == {frozenset({1, -1}), frozenset({2, -2})}


def _invariant_count(x):
    return sum(1 for o in x.orbits() if set(o) == {-y for y in o})


def test_invariant_orbits_monotone():
    elems = list(group_elements("W", 3))
    for a, b in itertools.product(elems, repeat=2):
        if leq(a, b):
            assert _invariant_count(b) >= _invariant_count(a)


# --- intervals ----------------------------------------------------------

def test_interval_sizes():
    assert list(interval(identity("S", 3))) == [identity("S", 3)]
    assert sum(1 for _ in interval(long_cycle(4))) == 14
    assert sum(1 for _ in interval(omega(2))) == 6


@pytest.mark.parametrize("group,n", [("S", 3), ("W", 2), ("W", 3)])
def test_interval_matches_group_filter(group, n):
    elems = list(group_elements(group, n))
    for b in elems:
        assert set(interval(b)) == {a for a in elems if leq(a, b)}


def test_orbits_nest_below():
    for top in (long_cycle(5), omega(4)):
        for a in interval(top):
            for b in interval(top):
                if leq(a, b):
                    ob = [set(o) for o in b.orbits()]
                    assert all(any(set(o) <= B for B in ob) for o in a.orbits())


def test_single_invariant_orbit_below_omega():
    assert all(_invariant_count(t) <= 1 for t in interval(omega(4)))


# --- census and factorizations ------------------------------------------

def test_census_examples():
    assert orbit_census(identity("S", 4)).k == (4, 0, 0, 0)
    c = orbit_census(omega(2))
    assert c.k == (0, 0) and c.l == (0, 1)
    c = orbit_census(W(2, (1, -1), (2, -2)))
    assert c.k == (0, 0) and c.l == (2, 0)


def test_cycle_factorization_a():
    b = S(5, (1, 3), (2, 5, 4))
    factors = cycle_factorization_a(b)
    prod = identity("S", 5)
    for f in factors:
        prod = prod * f
    assert prod == b
    assert sum(word_length(f) for f in factors) == word_length(b)
    assert cycle_factorization_a(long_cycle(4)) == [long_cycle(4)]


def test_cycle_factorization_b():
    tau = W(2, (1, -1), (2, -2))
    fac = cycle_factorization_b(tau)
    assert set(fac.factors) == {W(2, (1, -1)), W(2, (2, -2))}
    assert fac.product() == tau
    for t in interval(omega(3)):
        if t.is_identity():
            continue
        fac = cycle_factorization_b(t)
        assert fac.product() == t
        assert sum(word_length(f) for f in fac.factors) == word_length(t)


def test_cycle_factorization_b_rejects_identity():
    with pytest.raises(DomainError):
        cycle_factorization_b(identity("W", 2))


def test_interval_factorize_examples():
    [(support, kind)] = interval_factorize(omega(3))
    assert kind == "B" and set(support) == {1, 2, 3, -1, -2, -3}
    [(support, kind)] = interval_factorize(gamma(3))
    assert kind == "A" and {abs(x) for x in support} == {1, 2, 3}
    with pytest.raises(DomainError):
        interval_factorize(W(3, (1, 3, 2), (-1, -3, -2)))


def test_interval_factorize_predicts_sizes():
    for t in interval(omega(4)):
        if t.is_identity():
            continue
        assert sum(1 for _ in interval(t)) == predicted_interval_size(interval_factorize(t))


# --- convolution --------------------------------------------------------

def _random_function(group, n, rng):
    return GroupFunction.tabulate(group, n, lambda x: Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def test_convolution_low_degree():
    rng = random.Random(3)
    u, v = _random_function("S", 3, rng), _random_function("S", 3, rng)
    w = restricted_convolution(u, v)
    e = identity("S", 3)
    assert w(e) == u(e) * v(e)
    for x in generators("S", 3):
        assert w(x) == u(e) * v(x) + u(x) * v(e)


@pytest.mark.parametrize("group,n", [("S", 3), ("W", 2)])
def test_convolution_associative_unital(group, n):
    rng = random.Random(n)
    delta = GroupFunction.delta(group, n)
    for _ in range(3):
        u, v, w = (_random_function(group, n, rng) for _ in range(3))
        assert restricted_convolution(u, delta) == u
        assert restricted_convolution(delta, u) == u
        lhs = restricted_convolution(restricted_convolution(u, v), w)
        rhs = restricted_convolution(u, restricted_convolution(v, w))
        assert lhs == rhs


def test_convolution_brute_force():
    rng = random.Random(11)
    u, v = _random_function("W", 2, rng), _random_function("W", 2, rng)
    w = restricted_convolution(u, v)
    elems = list(group_elements("W", 2))
    for a in elems:
        expected = sum((u(b) * v(b.inverse() * a) for b in elems
                        if word_length(b) + word_length(b.inverse() * a) == word_length(a)), Fraction(0))
        assert w(a) == expected


# --- I/O ----------------------------------------------------------------

def test_permutation_round_trips():
    for x in list(group_elements("W", 2)) + list(group_elements("S", 3)):
        text = format_permutation(x)
        assert parse_permutation(text, n=x.n, group=x.group) == x
        assert permutation_from_json(permutation_to_json(x)) == x
    assert format_permutation(identity("S", 3)) == "()"
    assert parse_permutation("e", n=3, group="S") == identity("S", 3)
