"""Non-crossing partitions of types A and B.

Type A partitions live on ``[n] = {1 < ... < n}``.  Type B partitions live on
``[±n] = {1 < ... < n < -1 < ... < -n}`` and are invariant under ``x -> -x``;
they are stored with all ``2n`` elements spelled out.

Every partition is kept in canonical form: elements inside a block are sorted
by the ground order and blocks are sorted by their first element.  Structural
equality is therefore mathematical equality.
"""

from __future__ import annotations

import json
import math
import re
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, StructureError

__all__ = [
    "GroundOrder",
    "NCPartitionA",
    "NCPartitionB",
    "is_noncrossing",
    "enumerate_noncrossing",
    "enumerate_nca",
    "enumerate_ncb",
    "kreweras",
    "meet",
    "join",
    "refinement_leq",
    "abs_map",
    "abs_fiber",
    "zero_block",
    "catalan",
    "parse_partition",
    "format_partition",
    "partition_to_json",
    "partition_from_json",
]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


class GroundOrder:
    """A finite totally ordered set, given by listing its elements in increasing order."""

    __slots__ = ("elements", "_pos")

    def __init__(self, elements: Iterable[int]):
        self.elements = tuple(elements)
        self._pos = {x: i for i, x in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise StructureError("ground order lists an element twice")

    @staticmethod
    @lru_cache(maxsize=None)
    def type_a(n: int) -> "GroundOrder":
        _check_n(n)
        return GroundOrder(range(1, n + 1))

    @staticmethod
    @lru_cache(maxsize=None)
    def type_b(n: int) -> "GroundOrder":
        _check_n(n)
        return GroundOrder(list(range(1, n + 1)) + [-i for i in range(1, n + 1)])

    def position(self, x: int) -> int:
        try:
            return self._pos[x]
        except KeyError:
            raise StructureError(f"{x} is not in the ground set") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._pos

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundOrder) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"GroundOrder({list(self.elements)})"


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


# ---------------------------------------------------------------------------
# position-level machinery (blocks are sorted tuples of positions 0..m-1)


def _to_positions(blocks, order: GroundOrder) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for block in blocks:
        block = tuple(block)
        if not block:
            raise StructureError("empty block")
        pos = sorted(order.position(x) for x in block)
        for p in pos:
            if p in seen:
                raise StructureError(f"element {order.elements[p]} appears in two blocks")
            seen.add(p)
        out.append(tuple(pos))
    if len(seen) != len(order):
        missing = [x for x in order.elements if order.position(x) not in seen]
        raise StructureError(f"elements {missing} are not covered")
    return out


def _positions_noncrossing(pos_blocks: Sequence[Sequence[int]], m: int) -> bool:
    owner = [0] * m
    last = {}
    for b, block in enumerate(pos_blocks):
        for p in block:
            owner[p] = b
        last[b] = block[-1]
    stack = []
    opened = set()
    for i in range(m):
        b = owner[i]
        if b in opened:
            if stack[-1] != b:
                return False
        else:
            opened.add(b)
            stack.append(b)
        if last[b] == i:
            stack.pop()
    return True


def _blocks_cross(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff two disjoint position sets interleave as a < b < c < d."""
    tagged = sorted([(p, 0) for p in x] + [(p, 1) for p in y])
    runs = 1
    for (_, s), (_, t) in zip(tagged, tagged[1:]):
        if s != t:
            runs += 1
    return runs >= 4


def _canonical(pos_blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in pos_blocks))


def _kreweras_positions(pos_blocks, m: int, side: str) -> tuple[tuple[int, ...], ...]:
    # Barred copy k' sits right after k (side="right") or right before k ("left").
    # k' ~ l' (k < l) iff the chord k'--l' meets no block, i.e. no block has
    # elements both inside and outside the window the chord spans.
    counts = []
    for block in pos_blocks:
        pref = [0] * (m + 1)
        members = set(block)
        for k in range(m):
            pref[k + 1] = pref[k] + (k in members)
        counts.append((pref, len(block)))

    def compatible(k: int, l: int) -> bool:
        lo, hi = (k + 1, l + 1) if side == "right" else (k, l)
        for pref, size in counts:
            inside = pref[hi] - pref[lo]
            if 0 < inside < size:
                return False
        return True

    label = [-1] * m
    out = []
    for k in range(m):
        if label[k] >= 0:
            continue
        label[k] = len(out)
        cls = [k]
        for l in range(k + 1, m):
            if label[l] < 0 and compatible(k, l):
                label[l] = label[k]
                cls.append(l)
        out.append(tuple(cls))
    return tuple(out)


_NC_CACHE: dict[int, tuple] = {}


def _nc_positions(m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-crossing partitions of ``range(m)``, decomposed by the block of 0.

    The block containing the minimum is chosen first (smaller blocks first, then
    lexicographically); the gaps it leaves are filled independently.  Output
    blocks are listed in the order they were created, not canonically.
    """
    if m in _NC_CACHE:
        yield from _NC_CACHE[m]
        return
    if m == 0:
        yield ()
        return
    cacheable = m <= 10
    acc = [] if cacheable else None
    rest = range(1, m)
    for k in range(m):
        for chosen in combinations(rest, k):
            block = (0,) + chosen
            bounds = block + (m,)
            gap_spans = [(bounds[t] + 1, bounds[t + 1]) for t in range(len(bounds) - 1)]
            gap_spans = [(lo, hi) for lo, hi in gap_spans if hi > lo]
            gap_options = [
                [tuple(tuple(lo + q for q in b) for b in part) for part in _nc_positions(hi - lo)]
                for lo, hi in gap_spans
            ]
            for parts in product(*gap_options):
                part = (block,) + tuple(b for g in parts for b in g)
                if acc is not None:
                    acc.append(part)
                yield part
    if acc is not None:
        _NC_CACHE[m] = tuple(acc)


# ---------------------------------------------------------------------------
# partition classes


class _NCPartition:
    __slots__ = ("n", "blocks", "_pos_blocks")
    kind = "?"

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        _check_n(n)
        order = self.ground_order_for(n)
        pos = _to_positions(blocks, order)
        if not _positions_noncrossing(pos, len(order)):
            raise StructureError(f"partition {self._fmt_raw(blocks)} is crossing")
        self._setup(n, _canonical(pos))
        self._validate_extra()

    @classmethod
    def ground_order_for(cls, n: int) -> GroundOrder:
        raise NotImplementedError

    @classmethod
    def _trusted(cls, n: int, pos_blocks) -> "_NCPartition":
        obj = cls.__new__(cls)
        obj._setup(n, _canonical(pos_blocks))
        return obj

    def _setup(self, n: int, pos_blocks) -> None:
        order = self.ground_order_for(n)
        self.n = n
        self._pos_blocks = pos_blocks
        self.blocks = tuple(tuple(order.elements[p] for p in b) for b in pos_blocks)

    def _validate_extra(self) -> None:
        pass

    @staticmethod
    def _fmt_raw(blocks) -> str:
        return "{" + ",".join("(" + ",".join(map(str, b)) + ")" for b in blocks) + "}"

    @property
    def order(self) -> GroundOrder:
        return self.ground_order_for(self.n)

    def blno(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise StructureError(f"{x} is not in the ground set")

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @classmethod
    def bottom(cls, n: int):
        return cls._trusted(n, [(i,) for i in range(len(cls.ground_order_for(n)))])

    @classmethod
    def top(cls, n: int):
        return cls._trusted(n, [tuple(range(len(cls.ground_order_for(n))))])

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.n == other.n and self._pos_blocks == other._pos_blocks

    def __hash__(self) -> int:
        return hash((self.kind, self.n, self._pos_blocks))

    def __lt__(self, other) -> bool:
        # total order used only for sorting output deterministically
        return (self.n, self._pos_blocks) < (other.n, other._pos_blocks)

    def __le__(self, other) -> bool:
        return refinement_leq(self, other)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {list(map(list, self.blocks))})"


class NCPartitionA(_NCPartition):
    """A non-crossing partition of ``[n]``."""

    __slots__ = ()
    kind = "A"

    @classmethod
    def ground_order_for(cls, n: int) -> GroundOrder:
        return GroundOrder.type_a(n)


class NCPartitionB(_NCPartition):
    """An inversion-invariant non-crossing partition of ``[±n]``."""

    __slots__ = ()
    kind = "B"

    @classmethod
    def ground_order_for(cls, n: int) -> GroundOrder:
        return GroundOrder.type_b(n)

    def _validate_extra(self) -> None:
        block_set = {frozenset(b) for b in self.blocks}
        zero = 0
        for b in self.blocks:
            neg = frozenset(-x for x in b)
            if neg not in block_set:
                raise StructureError(f"block {b} has no mirror block")
            if neg == frozenset(b):
                zero += 1
        if zero > 1:
            raise StructureError("more than one inversion-invariant block")


# ---------------------------------------------------------------------------
# operations


def is_noncrossing(blocks: Iterable[Iterable[int]], order: GroundOrder) -> bool:
    """Whether ``blocks`` (a partition of ``order``'s elements) has no crossing quadruple."""
    pos = _to_positions(blocks, order)
    return _positions_noncrossing(pos, len(order))


def enumerate_noncrossing(order: GroundOrder) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All non-crossing partitions of an arbitrary ordered set, as canonical block tuples."""
    els = order.elements
    for part in _nc_positions(len(order)):
        yield tuple(tuple(els[p] for p in b) for b in _canonical(part))


def enumerate_nca(n: int) -> Iterator[NCPartitionA]:
    """Yield every element of NC^(A)(n) exactly once.

    Order: decomposition by the block containing 1, smallest such block first,
    gaps filled recursively.  The first partition is ``0_n`` and the last ``1_n``.
    """
    _check_n(n)
    for part in _nc_positions(n):
        yield NCPartitionA._trusted(n, part)


def enumerate_ncb(n: int) -> Iterator[NCPartitionB]:
    """Yield every element of NC^(B)(n) exactly once.

    Runs over ``enumerate_nca(n)`` and lifts each partition through
    :func:`abs_fiber`, so the output is grouped by absolute value.
    """
    _check_n(n)
    for p in enumerate_nca(n):
        yield from abs_fiber(p)


def _same_kind(p, q) -> None:
    if type(p) is not type(q):
        raise DomainError("partitions of different types")
    if p.n != q.n:
        raise DomainError(f"partitions of different sizes ({p.n} vs {q.n})")


def kreweras(p, side: str = "right"):
    """Kreweras complement Kr(p) (``side="right"``) or Kr'(p) (``side="left"``)."""
    if side not in ("right", "left"):
        raise DomainError(f"side must be 'right' or 'left', got {side!r}")
    m = len(p.order)
    return type(p)._trusted(p.n, _kreweras_positions(p._pos_blocks, m, side))


def refinement_leq(p, q) -> bool:
    """``p <= q``: every block of p lies inside a block of q."""
    _same_kind(p, q)
    m = len(p.order)
    owner = [0] * m
    for b, block in enumerate(q._pos_blocks):
        for x in block:
            owner[x] = b
    return all(len({owner[x] for x in block}) == 1 for block in p._pos_blocks)


def meet(p, q):
    _same_kind(p, q)
    m = len(p.order)
    owner = [0] * m
    for b, block in enumerate(q._pos_blocks):
        for x in block:
            owner[x] = b
    pieces = []
    for block in p._pos_blocks:
        split: dict[int, list[int]] = {}
        for x in block:
            split.setdefault(owner[x], []).append(x)
        pieces.extend(tuple(v) for v in split.values())
    return type(p)._trusted(p.n, pieces)


def join(p, q):
    """Join in the NC lattice: partition-lattice join, then merge crossing blocks until stable."""
    _same_kind(p, q)
    m = len(p.order)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for part in (p, q):
        for block in part._pos_blocks:
            for x in block[1:]:
                union(block[0], x)
    while True:
        groups: dict[int, list[int]] = {}
        for x in range(m):
            groups.setdefault(find(x), []).append(x)
        blocks = list(groups.values())
        merged = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if _blocks_cross(blocks[i], blocks[j]):
                    union(blocks[i][0], blocks[j][0])
                    merged = True
        if not merged:
            return type(p)._trusted(p.n, blocks)


def abs_map(pi: NCPartitionB) -> NCPartitionA:
    """The absolute value of a type-B partition: blocks ``{|x| : x in X}``."""
    if not isinstance(pi, NCPartitionB):
        raise DomainError("abs_map expects an NCPartitionB")
    seen = {}
    for b in pi.blocks:
        key = frozenset(abs(x) for x in b)
        seen[key] = None
    return NCPartitionA(pi.n, [sorted(k) for k in seen])


def zero_block(pi: NCPartitionB) -> tuple[int, ...] | None:
    """The unique block X with X = -X, or None."""
    for b in pi.blocks:
        if set(b) == {-x for x in b}:
            return b
    return None


def _lift(p: NCPartitionA, chosen: Sequence[int]) -> NCPartitionB:
    """The unique element of Abs^{-1}(p) whose zero-block is ``chosen ∪ -chosen``."""
    n = p.n
    order = GroundOrder.type_b(n)
    m = 2 * n
    zero = set(chosen) | {-x for x in chosen}
    in_zero = [False] * m
    for z in zero:
        in_zero[order.position(z)] = True

    def arc_clear(u: int, v: int) -> bool:
        k = (u + 1) % m
        while k != v:
            if in_zero[k]:
                return False
            k = (k + 1) % m
        return True

    def same_region(x: int, y: int) -> bool:
        u, v = order.position(x), order.position(y)
        return arc_clear(u, v) or arc_clear(v, u)

    blocks = [sorted(zero, key=order.position)]
    chosen_set = set(chosen)
    for block in p.blocks:
        if set(block) == chosen_set:
            continue
        anchor = block[0]
        lifted = [anchor]
        for b in block[1:]:
            plus, minus = same_region(anchor, b), same_region(anchor, -b)
            if plus == minus:
                raise StructureError(f"cannot lift block {block} around zero-block {sorted(zero)}")
            lifted.append(b if plus else -b)
        blocks.append(lifted)
        blocks.append([-x for x in lifted])
    return NCPartitionB(n, blocks)


def abs_fiber(p: NCPartitionA) -> list[NCPartitionB]:
    """All type-B partitions with absolute value ``p``; always ``p.n + 1`` of them.

    The first ``blno(p)`` entries lift a block of ``p`` into a zero-block of the
    result; the remaining ones lift a block of ``Kr(p)`` into a zero-block of the
    result's complement.
    """
    if not isinstance(p, NCPartitionA):
        raise DomainError("abs_fiber expects an NCPartitionA")
    out = [_lift(p, block) for block in p.blocks]
    q = kreweras(p)
    for block in q.blocks:
        out.append(kreweras(_lift(q, block), side="left"))
    return out


# ---------------------------------------------------------------------------
# text and JSON forms

_BLOCK_RE = re.compile(r"\(([^()]*)\)")


def format_partition(p) -> str:
    return "{" + ",".join("(" + ",".join(str(x) for x in b) + ")" for b in p.blocks) + "}"


def parse_partition(text: str, n: int | None = None, kind: str | None = None):
    """Parse ``{(1,2),(3,4)}`` (type A) or ``{(1,-1),(2),(-2)}`` (type B).

    The type defaults to B when a negative element occurs, and ``n`` defaults
    to the largest absolute value.
    """
    body = re.sub(r"\s+", "", text)
    if not (body.startswith("{") and body.endswith("}")):
        raise StructureError(f"not a partition literal: {text!r}")
    inner = body[1:-1]
    blocks = []
    for mt in _BLOCK_RE.finditer(inner):
        if not mt.group(1):
            raise StructureError("empty block in literal")
        blocks.append([int(tok) for tok in mt.group(1).split(",")])
    if _BLOCK_RE.sub("", inner).replace(",", ""):
        raise StructureError(f"unexpected characters in {text!r}")
    if not blocks:
        raise StructureError("partition literal has no blocks")
    flat = [x for b in blocks for x in b]
    if kind is None:
        kind = "B" if any(x < 0 for x in flat) else "A"
    if n is None:
        n = max(abs(x) for x in flat)
    if kind == "A":
        return NCPartitionA(n, blocks)
    if kind == "B":
        return NCPartitionB(n, blocks)
    raise DomainError(f"unknown partition type {kind!r}")


def partition_to_json(p) -> str:
    return json.dumps({"n": p.n, "type": p.kind, "blocks": [list(b) for b in p.blocks]},
                      separators=(",", ":"))


def partition_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    cls = {"A": NCPartitionA, "B": NCPartitionB}.get(data.get("type"))
    if cls is None:
        raise StructureError(f"unknown partition type {data.get('type')!r}")
    return cls(int(data["n"]), data["blocks"])
