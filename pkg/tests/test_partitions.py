import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ncbfree.errors import DomainError, StructureError
from ncbfree.partitions import (
    GroundOrder,
    NCPartitionA,
    NCPartitionB,
    abs_fiber,
    abs_map,
    catalan,
    enumerate_nca,
    enumerate_ncb,
    enumerate_noncrossing,
    format_partition,
    is_noncrossing,
    join,
    kreweras,
    meet,
    parse_partition,
    partition_from_json,
    partition_to_json,
    refinement_leq,
    zero_block,
)


def set_partitions(items):
    """All set partitions of ``items`` (brute force, no pruning)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def crosses_naive(blocks, order):
    pos = {x: i for i, x in enumerate(order)}
    owner = {x: k for k, b in enumerate(blocks) for x in b}
    for a, b, c, d in itertools.combinations(order, 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return True
    return False


def nca_oracle(n):
    out = set()
    for part in set_partitions(range(1, n + 1)):
        if not crosses_naive(part, list(range(1, n + 1))):
            out.add(NCPartitionA(n, part))
    return out


def ncb_oracle(n):
    order = list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
    out = set()
    for part in set_partitions(order):
        blocks = {frozenset(b) for b in part}
        if any(frozenset(-x for x in b) not in blocks for b in blocks):
            continue
        if not crosses_naive(part, order):
            out.add(NCPartitionB(n, part))
    return out


def P(text):
    return parse_partition(text)


# --- membership ----------------------------------------------------------

def test_minimal_crossing_pattern():
    assert not is_noncrossing([(1, 3), (2, 4)], GroundOrder.type_a(4))
    assert is_noncrossing([(1, 4), (2, 3)], GroundOrder.type_a(4))


def test_type_b_lift_example_is_noncrossing():
    assert is_noncrossing([(1, 2, -1, -2), (3, 4), (-3, -4)], GroundOrder.type_b(4))


def test_crossing_partition_rejected():
    with pytest.raises(StructureError):
        NCPartitionA(4, [(1, 3), (2, 4)])


def test_type_b_needs_inversion_symmetry():
    with pytest.raises(StructureError):
        NCPartitionB(2, [(1, 2), (-1,), (-2,)])


def test_two_zero_blocks_rejected():
    with pytest.raises(StructureError):
        NCPartitionB(2, [(1, -1), (2, -2)])


def test_n_zero_rejected():
    with pytest.raises(DomainError):
        list(enumerate_nca(0))
    with pytest.raises(DomainError):
        list(enumerate_ncb(0))


# --- enumeration ---------------------------------------------------------

def test_enum_small():
    assert list(enumerate_nca(1)) == [NCPartitionA(1, [(1,)])]
    assert len(list(enumerate_nca(3))) == 5


def test_n4_excludes_exactly_one():
    all15 = list(set_partitions(range(1, 5)))
    assert len(all15) == 15
    nc = set(enumerate_nca(4))
    assert len(nc) == 14
    excluded = [p for p in all15 if not is_noncrossing(p, GroundOrder.type_a(4))]
    assert [sorted(map(tuple, p)) for p in excluded] == [[(1, 3), (2, 4)]]


@pytest.mark.parametrize("n", range(1, 7))
def test_nca_matches_brute_force(n):
    got = list(enumerate_nca(n))
    assert len(got) == len(set(got))
    assert set(got) == nca_oracle(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_ncb_matches_brute_force(n):
    got = list(enumerate_ncb(n))
    assert len(got) == len(set(got))
    assert set(got) == ncb_oracle(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_ncb_matches_filter_of_type_a_on_signed_set(n):
    filt = set()
    for blocks in enumerate_noncrossing(GroundOrder.type_b(n)):
        bs = {frozenset(b) for b in blocks}
        if all(frozenset(-x for x in b) in bs for b in bs):
            filt.add(NCPartitionB(n, blocks))
    assert filt == set(enumerate_ncb(n))


def test_ncb_small_counts():
    assert set(enumerate_ncb(1)) == {NCPartitionB(1, [(1,), (-1,)]), NCPartitionB(1, [(1, -1)])}
    assert [len(list(enumerate_ncb(n))) for n in (1, 2, 3)] == [2, 6, 20]


def test_cardinalities():
    for n in range(1, 11):
        assert sum(1 for _ in enumerate_nca(n)) == comb(2 * n, n) // (n + 1) == catalan(n)
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_ncb(n)) == comb(2 * n, n)


def test_zero_block_iff_odd_block_count():
    for n in range(1, 5):
        for pi in enumerate_ncb(n):
            assert (zero_block(pi) is not None) == (pi.blno() % 2 == 1)


# --- Kreweras -----------------------------------------------------------

def test_kreweras_examples():
    assert kreweras(P("{(1,2),(3,4)}")) == P("{(1),(2,4),(3)}")
    pi = P("{(1,-2),(-1,2),(3,4),(-3,-4)}")
    assert kreweras(pi) == P("{(1,-1),(2,4),(-2,-4),(3),(-3)}")


@pytest.mark.parametrize("n", range(1, 6))
def test_kreweras_extremes(n):
    assert kreweras(NCPartitionA.bottom(n)) == NCPartitionA.top(n)
    assert kreweras(NCPartitionA.top(n)) == NCPartitionA.bottom(n)
    assert kreweras(NCPartitionB.bottom(n)) == NCPartitionB.top(n)
    assert kreweras(NCPartitionB.top(n)) == NCPartitionB.bottom(n)


def _maximal_complement(p, candidates, ground, side):
    """Largest q with p and q non-crossing when interleaved (brute force)."""
    m = len(ground)
    pos = {x: i + 1 for i, x in enumerate(ground)}
    if side == "right":
        enc_p, enc_q = (lambda x: 2 * pos[x] - 1), (lambda x: 2 * pos[x])
    else:
        enc_p, enc_q = (lambda x: 2 * pos[x]), (lambda x: 2 * pos[x] - 1)
    good = []
    for q in candidates:
        blocks = [tuple(map(enc_p, b)) for b in p.blocks] + [tuple(map(enc_q, b)) for b in q.blocks]
        if is_noncrossing(blocks, GroundOrder.type_a(2 * m)):
            good.append(q)
    top = [q for q in good if all(refinement_leq(r, q) for r in good)]
    assert len(top) == 1
    return top[0]


@pytest.mark.parametrize("side", ["right", "left"])
@pytest.mark.parametrize("n", range(1, 6))
def test_kreweras_is_maximal_complement_type_a(n, side):
    cands = list(enumerate_nca(n))
    ground = list(range(1, n + 1))
    for p in cands:
        assert kreweras(p, side=side) == _maximal_complement(p, cands, ground, side)


@pytest.mark.parametrize("side", ["right", "left"])
@pytest.mark.parametrize("n", range(1, 4))
def test_kreweras_is_maximal_complement_type_b(n, side):
    cands = list(enumerate_ncb(n))
    ground = list(GroundOrder.type_b(n).elements)
    for p in cands:
        assert kreweras(p, side=side) == _maximal_complement(p, cands, ground, side)


@pytest.mark.parametrize("n", range(1, 7))
def test_kreweras_inverse_and_block_counts(n):
    for p in enumerate_nca(n):
        k = kreweras(p)
        assert kreweras(k, side="left") == p
        assert kreweras(kreweras(p, side="left")) == p
        assert p.blno() + k.blno() == n + 1
    if n <= 5:
        for pi in enumerate_ncb(n):
            k = kreweras(pi)
            assert kreweras(k, side="left") == pi
            assert pi.blno() + k.blno() == 2 * n + 1


@pytest.mark.parametrize("n", range(1, 5))
def test_kreweras_order_reversing(n):
    ps = list(enumerate_nca(n))
    for p, q in itertools.product(ps, repeat=2):
        assert (p <= q) == (kreweras(q) <= kreweras(p))


@pytest.mark.parametrize("n", range(1, 6))
def test_kreweras_commutes_with_abs(n):
    for pi in enumerate_ncb(n):
        assert kreweras(abs_map(pi)) == abs_map(kreweras(pi))


def test_zero_block_xor_under_kreweras():
    for pi in enumerate_ncb(3):
        assert (zero_block(pi) is None) != (zero_block(kreweras(pi)) is None)


# --- lattice ------------------------------------------------------------

def test_refinement_examples():
    assert refinement_leq(P("{(1),(2,4),(3)}"), P("{(1),(2,3,4)}"))
    assert not refinement_leq(P("{(1,2),(3,4)}"), P("{(1,4),(2,3)}"))


def test_join_example():
    assert join(P("{(1,3),(2),(4)}"), P("{(2,4),(1),(3)}")) == NCPartitionA.top(4)


@pytest.mark.parametrize("n", range(1, 6))
def test_meet_join_brute_force(n):
    ps = list(enumerate_nca(n))
    top, bot = NCPartitionA.top(n), NCPartitionA.bottom(n)
    for p, q in itertools.product(ps, repeat=2):
        lower = [r for r in ps if r <= p and r <= q]
        upper = [r for r in ps if p <= r and q <= r]
        m = meet(p, q)
        j = join(p, q)
        assert m in lower and all(r <= m for r in lower)
        assert j in upper and all(j <= r for r in upper)
    for p in ps:
        assert meet(p, top) == p and join(p, bot) == p
        assert bot <= p <= top


def test_meet_join_type_b():
    ps = list(enumerate_ncb(3))
    for p, q in itertools.product(ps, repeat=2):
        upper = [r for r in ps if p <= r and q <= r]
        lower = [r for r in ps if r <= p and r <= q]
        assert join(p, q) in upper and all(join(p, q) <= r for r in upper)
        assert meet(p, q) in lower and all(r <= meet(p, q) for r in lower)


def test_mixed_types_rejected():
    with pytest.raises(DomainError):
        meet(NCPartitionA.top(2), NCPartitionB.top(2))


# --- Abs ----------------------------------------------------------------

def test_abs_examples():
    assert abs_map(P("{(1,2,-1,-2),(3,4),(-3,-4)}")) == P("{(1,2),(3,4)}")
    assert abs_map(P("{(1,-2),(-1,2),(3,4),(-3,-4)}")) == P("{(1,2),(3,4)}")
    assert abs_map(NCPartitionB.bottom(3)) == NCPartitionA.bottom(3)


def test_fiber_example():
    fib = abs_fiber(P("{(1,2),(3,4)}"))
    assert P("{(1,2,-1,-2),(3,4),(-3,-4)}") in fib
    assert P("{(1,-2),(-1,2),(3,4),(-3,-4)}") in fib


@pytest.mark.parametrize("n", range(1, 5))
def test_fiber_of_top(n):
    fib = abs_fiber(NCPartitionA.top(n))
    oracle = [pi for pi in enumerate_ncb(n) if abs_map(pi) == NCPartitionA.top(n)]
    assert set(fib) == set(oracle)
    assert NCPartitionB.top(n) in fib
    assert sum(zero_block(pi) is None for pi in fib) == n


@pytest.mark.parametrize("n", range(1, 7))
def test_fibers_partition_ncb(n):
    seen = []
    for p in enumerate_nca(n):
        fib = abs_fiber(p)
        assert len(fib) == len(set(fib)) == n + 1
        assert all(abs_map(pi) == p for pi in fib)
        seen.extend(fib)
    assert len(seen) == len(set(seen)) == comb(2 * n, n)


def test_zero_block_examples():
    assert zero_block(P("{(1,-1),(2),(-2)}")) == (1, -1)
    assert zero_block(P("{(1,2),(-1,-2)}")) is None


# --- I/O ----------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data())
def test_format_parse_round_trip_a(n, data):
    ps = list(enumerate_nca(n))
    p = data.draw(st.sampled_from(ps))
    assert parse_partition(format_partition(p), n=n) == p
    assert partition_from_json(partition_to_json(p)) == p


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_format_parse_round_trip_b(n, data):
    ps = list(enumerate_ncb(n))
    p = data.draw(st.sampled_from(ps))
    assert parse_partition(format_partition(p), n=n, kind="B") == p
    assert partition_from_json(partition_to_json(p)) == p


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7), st.data())
def test_kreweras_property(n, data):
    p = data.draw(st.sampled_from(list(enumerate_nca(n))))
    k = kreweras(p)
    assert kreweras(k, side="left") == p
    assert p.blno() + k.blno() == n + 1


def test_parse_garbage():
    with pytest.raises((StructureError, DomainError)):
        parse_partition("{(1,2),(2,3)}")
