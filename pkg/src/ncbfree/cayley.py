"""Marked groups (S_n, T_n) and (W_n, R_n).

``T_n`` is the set of all transpositions of ``[n]``; ``R_n`` consists of the
reflections ``(i,-i)`` and the pairs ``(i,j)(-i,-j)`` with ``|i| != |j|``.
Both sets are closed under inversion and conjugation, so word length,
geodesic distance and the order ``a <= b  <=>  |a| + |a^-1 b| = |b|`` behave
well.  Products compose right to left: ``(a*b)(x) = a(b(x))``.
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DomainError, StructureError
from .partitions import GroundOrder, catalan

__all__ = [
    "Permutation",
    "SignedPermutation",
    "GroupFunction",
    "OrbitCensus",
    "CycleFactorizationB",
    "identity",
    "compose",
    "word_length",
    "leq",
    "covers",
    "covers_metric",
    "cover_case",
    "is_generator",
    "generators",
    "interval",
    "group_elements",
    "cayley_distances",
    "orbit_census",
    "cycle_factorization_a",
    "cycle_factorization_b",
    "interval_factorize",
    "predicted_interval_size",
    "restricted_convolution",
    "restrict",
    "long_cycle",
    "omega",
    "gamma",
    "parse_permutation",
    "format_permutation",
]


class _GroupElement:
    __slots__ = ("n", "images", "_hash")
    group = "?"

    def __init__(self, n: int, images: Iterable[int]):
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"n must be a positive integer, got {n!r}")
        self.n = n
        self.images = tuple(images)
        self._check()
        self._hash = hash((self.group, n, self.images))

    def _check(self) -> None:
        raise NotImplementedError

    @classmethod
    def ground(cls, n: int) -> GroundOrder:
        raise NotImplementedError

    @classmethod
    def identity(cls, n: int):
        return cls(n, range(1, n + 1))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]):
        el = cls(n, [mapping.get(i, i) for i in range(1, n + 1)])
        for x, y in mapping.items():
            if x < 0 and el(x) != y:
                raise StructureError(f"mapping {x} -> {y} breaks tau(-i) = -tau(i)")
        return el

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]):
        mapping: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                if x in mapping:
                    raise StructureError(f"{x} occurs in two cycles")
                mapping[x] = y
        for x, y in mapping.items():
            if x not in cls.ground(n):
                raise StructureError(f"{x} is not in the ground set")
        try:
            return cls.from_mapping(n, mapping)
        except StructureError:
            raise StructureError("cycles do not describe a signed permutation") from None

    def __call__(self, x: int) -> int:
        raise NotImplementedError

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = {self(x): x for x in self.ground(self.n).elements}
        return type(self).from_mapping(self.n, inv)

    def orbits(self) -> list[tuple[int, ...]]:
        """Cycles of the permutation; each starts at its first element in ground order."""
        seen = set()
        out = []
        for x in self.ground(self.n).elements:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.n == other.n and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {format_permutation(self)!r})"


class Permutation(_GroupElement):
    """An element of S_n; ``images[i-1]`` is the image of ``i``."""

    __slots__ = ()
    group = "S"

    @classmethod
    def ground(cls, n: int) -> GroundOrder:
        return GroundOrder.type_a(n)

    def _check(self) -> None:
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise StructureError(f"{list(self.images)} is not a permutation of [{self.n}]")

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise StructureError(f"{x} is not in [{self.n}]")
        return self.images[x - 1]


class SignedPermutation(_GroupElement):
    """An element of W_n; ``images[i-1]`` is the image of ``i`` and ``tau(-i) = -tau(i)``."""

    __slots__ = ()
    group = "W"

    @classmethod
    def ground(cls, n: int) -> GroundOrder:
        return GroundOrder.type_b(n)

    def _check(self) -> None:
        if sorted(abs(x) for x in self.images) != list(range(1, self.n + 1)):
            raise StructureError(f"{list(self.images)} is not a signed permutation of [±{self.n}]")

    def __call__(self, x: int) -> int:
        if x > 0 and x <= self.n:
            return self.images[x - 1]
        if x < 0 and -x <= self.n:
            return -self.images[-x - 1]
        raise StructureError(f"{x} is not in [±{self.n}]")


_CLASSES = {"S": Permutation, "W": SignedPermutation}


def _cls(group: str):
    try:
        return _CLASSES[group]
    except KeyError:
        raise DomainError(f"unknown group {group!r}; expected 'S' or 'W'") from None


def identity(group: str, n: int):
    return _cls(group).identity(n)


def _same_group(a, b) -> None:
    if type(a) is not type(b) or a.n != b.n:
        raise DomainError(f"elements of different groups: {a!r}, {b!r}")


def compose(a, b):
    """``a*b``: apply ``b`` first, then ``a``."""
    _same_group(a, b)
    return type(a)(a.n, [a(b(i)) for i in range(1, a.n + 1)])


def _is_invariant(orbit: tuple[int, ...]) -> bool:
    return -orbit[0] in orbit


def word_length(x) -> int:
    """Length with respect to T_n (type A) or R_n (type B)."""
    orbs = x.orbits()
    if x.group == "S":
        return x.n - len(orbs)
    non_invariant = sum(1 for o in orbs if not _is_invariant(o))
    return x.n - non_invariant // 2


def leq(a, b) -> bool:
    _same_group(a, b)
    return word_length(a) + word_length(a.inverse() * b) == word_length(b)


def covers_metric(a, b) -> bool:
    """``b`` covers ``a`` via the metric description: a <= b and |b| = |a| + 1."""
    return word_length(b) == word_length(a) + 1 and leq(a, b)


def _orbit_index(x) -> dict[int, int]:
    idx = {}
    for k, orb in enumerate(x.orbits()):
        for y in orb:
            idx[y] = k
    return idx


def _reflection_shape(rho) -> tuple[str, int, int] | None:
    """Classify ``rho`` as a generator: ('t', i, j), ('a', i, -i), ('b', i, j) or None."""
    moved = [o for o in rho.orbits() if len(o) > 1]
    if rho.group == "S":
        if len(moved) == 1 and len(moved[0]) == 2:
            return ("t",) + moved[0]
        return None
    if len(moved) == 1 and len(moved[0]) == 2 and moved[0][1] == -moved[0][0]:
        return ("a",) + moved[0]
    if (len(moved) == 2 and all(len(o) == 2 for o in moved)
            and abs(moved[0][0]) != abs(moved[0][1])):
        i, j = moved[0]
        if set(moved[1]) == {-i, -j}:
            return ("b", i, j)
    return None


def is_generator(x) -> bool:
    return _reflection_shape(x) is not None


@lru_cache(maxsize=None)
def generators(group: str, n: int) -> tuple:
    cls = _cls(group)
    out = []
    if group == "S":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(cls.from_cycles(n, [(i, j)]))
    else:
        for i in range(1, n + 1):
            out.append(cls.from_cycles(n, [(i, -i)]))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(cls.from_cycles(n, [(i, j), (-i, -j)]))
                out.append(cls.from_cycles(n, [(i, -j), (-i, j)]))
    return tuple(out)


def cover_case(a, b) -> str | None:
    """Which cover situation ``b = a*rho`` is in, or None when ``b`` does not cover ``a``.

    Type A answers ``"t"``.  Type B answers one of ``"a"``..``"d"``, following the
    four ways a reflection can act on the orbits of ``a``.
    """
    _same_group(a, b)
    rho = a.inverse() * b
    shape = _reflection_shape(rho)
    if shape is None:
        return None
    orb = _orbit_index(a)
    kind, i, j = shape
    if kind == "t":
        return "t" if orb[i] != orb[j] else None
    if kind == "a":
        return "a" if orb[i] != orb[-i] else None
    for s, t in ((i, j), (j, i)):
        if orb[s] == orb[-s] and orb[t] != orb[-t]:
            return "b"
    if len({orb[i], orb[j], orb[-i], orb[-j]}) == 4:
        return "c"
    if orb[i] == orb[-j] and orb[i] != orb[-i]:
        return "d"
    return None


def covers(a, b) -> bool:
    """``b`` covers ``a``, decided from the orbit structure of ``a`` and ``a^-1 b``."""
    return cover_case(a, b) is not None


def group_elements(group: str, n: int) -> Iterator:
    cls = _cls(group)
    if group == "S":
        for perm in permutations(range(1, n + 1)):
            yield cls(n, perm)
    else:
        for perm in permutations(range(1, n + 1)):
            for signs in product((1, -1), repeat=n):
                yield cls(n, [s * x for s, x in zip(signs, perm)])


def cayley_distances(group: str, n: int) -> dict:
    """Graph distance from the identity for every element, by BFS in the Cayley graph."""
    e = identity(group, n)
    dist = {e: 0}
    queue = deque([e])
    gens = generators(group, n)
    while queue:
        a = queue.popleft()
        for r in gens:
            c = a * r
            if c not in dist:
                dist[c] = dist[a] + 1
                queue.append(c)
    return dist


@lru_cache(maxsize=4096)
def _interval_tuple(b) -> tuple:
    e = identity(b.group, b.n)
    top = word_length(b)
    seen = {e}
    order = [e]
    frontier = [e]
    gens = generators(b.group, b.n)
    level = 0
    while frontier and level < top:
        nxt = []
        for a in frontier:
            for r in gens:
                c = a * r
                if c in seen:
                    continue
                if word_length(c) == level + 1 and leq(c, b):
                    seen.add(c)
                    nxt.append(c)
        order.extend(nxt)
        frontier = nxt
        level += 1
    return tuple(order)


def interval(b) -> Iterator:
    """Yield ``[e, b]`` once each, level by level (BFS over cover relations from e)."""
    yield from _interval_tuple(b)


@dataclass(frozen=True)
class OrbitCensus:
    """Orbit counts of a group element.

    Type A: ``k[m-1]`` is the number of orbits of size m; ``l`` is None.
    Type B: ``k[m-1]`` counts pairs ``X, -X`` of non-invariant orbits of size m,
    and ``l[m-1]`` counts invariant orbits of size 2m.
    """

    k: tuple[int, ...]
    l: tuple[int, ...] | None = None


def orbit_census(x) -> OrbitCensus:
    k = [0] * x.n
    if x.group == "S":
        for o in x.orbits():
            k[len(o) - 1] += 1
        return OrbitCensus(tuple(k))
    l = [0] * x.n
    for o in x.orbits():
        if _is_invariant(o):
            l[len(o) // 2 - 1] += 1
        elif min(o, key=abs) > 0:
            # one representative per pair X, -X
            k[len(o) - 1] += 1
    return OrbitCensus(tuple(k), tuple(l))


def restrict(x, support: Iterable[int]):
    """The element acting like ``x`` on ``support`` (which must be x-stable) and trivially elsewhere."""
    support = set(support)
    return type(x).from_mapping(x.n, {i: x(i) for i in range(1, x.n + 1) if i in support})


@dataclass(frozen=True)
class CycleFactorizationB:
    """``tau = factors[0] * ... * factors[-1]`` with commuting, disjointly supported factors."""

    factors: tuple
    supports: tuple[tuple[int, ...], ...]

    def product(self):
        out = identity("W", self.factors[0].n)
        for f in self.factors:
            out = out * f
        return out


def cycle_factorization_a(b) -> list:
    """One cycle per orbit of ``b`` with more than one element."""
    if b.group != "S":
        raise DomainError("cycle_factorization_a expects a Permutation")
    return [restrict(b, o) for o in b.orbits() if len(o) > 1]


def cycle_factorization_b(tau: SignedPermutation) -> CycleFactorizationB:
    """Type-B cycle factorization: non-invariant pairs ``X ∪ -X`` first, invariant orbits after."""
    if tau.group != "W":
        raise DomainError("cycle_factorization_b expects a SignedPermutation")
    if tau.is_identity():
        raise DomainError("the identity has no cycle factorization")
    order = tau.ground(tau.n)
    pairs, invariant = [], []
    done = set()
    for o in tau.orbits():
        if len(o) == 1 or o[0] in done:
            continue
        if _is_invariant(o):
            invariant.append(tuple(o))
            done.update(o)
        else:
            support = tuple(sorted(set(o) | {-y for y in o}, key=order.position))
            pairs.append(support)
            done.update(support)
    supports = tuple(pairs + invariant)
    return CycleFactorizationB(tuple(restrict(tau, s) for s in supports), supports)


def long_cycle(n: int) -> Permutation:
    """``c = (1, 2, ..., n)`` in S_n."""
    return Permutation.from_cycles(n, [range(1, n + 1)])


def omega(n: int) -> SignedPermutation:
    """``(1, ..., n, -1, ..., -n)`` in W_n."""
    return SignedPermutation.from_cycles(n, [list(range(1, n + 1)) + [-i for i in range(1, n + 1)]])


def gamma(n: int) -> SignedPermutation:
    """``(1, ..., n)(-1, ..., -n)`` in W_n."""
    return SignedPermutation.from_cycles(n, [range(1, n + 1), [-i for i in range(1, n + 1)]])


def interval_factorize(tau: SignedPermutation) -> list[tuple[tuple[int, ...], str]]:
    """Describe ``[ε, tau]`` as a product of NC lattices, for ``ε != tau <= ω``.

    Each entry is ``(support, kind)``.  Kind ``"A"`` marks a pair of opposite
    orbits ``X ∪ -X`` contributing NC^(A)(|X|); kind ``"B"`` marks the invariant
    orbit Z contributing NC^(B)(|Z|/2).  Entries are ordered by the first
    support element in the ground order.
    """
    if tau.group != "W":
        raise DomainError("interval_factorize expects a SignedPermutation")
    if tau.is_identity():
        raise DomainError("interval_factorize needs tau != identity")
    if not leq(tau, omega(tau.n)):
        raise DomainError(f"{tau} is not below omega")
    fac = cycle_factorization_b(tau)
    order = tau.ground(tau.n)
    invariant = {frozenset(o) for o in tau.orbits() if _is_invariant(o)}
    items = [(s, "B" if frozenset(s) in invariant else "A") for s in fac.supports]
    items.sort(key=lambda item: order.position(item[0][0]))
    return items


def predicted_interval_size(factors: Iterable[tuple[tuple[int, ...], str]]) -> int:
    size = 1
    for support, kind in factors:
        half = len(support) // 2
        size *= catalan(half) if kind == "A" else math.comb(2 * half, half)
    return size


class GroupFunction:
    """A finitely supported function on S_n or W_n with exact values (default 0)."""

    __slots__ = ("group", "n", "values", "fn")

    def __init__(self, group: str, n: int, values: Mapping | None = None, fn: Callable | None = None):
        _cls(group)
        self.group = group
        self.n = n
        self.fn = fn
        self.values = {}
        for x, v in (values or {}).items():
            if x.group != group or x.n != n:
                raise StructureError(f"{x!r} is not an element of {group}_{n}")
            self.values[x] = Fraction(v)

    @classmethod
    def delta(cls, group: str, n: int) -> "GroupFunction":
        """The characteristic function of the identity, unit for ``*_r``."""
        return cls(group, n, {identity(group, n): 1})

    @classmethod
    def tabulate(cls, group: str, n: int, fn: Callable, elements: Iterable | None = None):
        if elements is None:
            elements = group_elements(group, n)
        return cls(group, n, {x: fn(x) for x in elements})

    @classmethod
    def lazy(cls, group: str, n: int, fn: Callable) -> "GroupFunction":
        """A function evaluated on demand through ``fn`` (results are cached)."""
        return cls(group, n, fn=fn)

    def __call__(self, x) -> Fraction:
        if x in self.values:
            return self.values[x]
        if self.fn is None:
            return Fraction(0)
        v = self.values[x] = Fraction(self.fn(x))
        return v

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupFunction) or (self.group, self.n) != (other.group, other.n):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self(k) == other(k) for k in keys)

    def __repr__(self) -> str:
        nz = sum(1 for v in self.values.values() if v)
        return f"GroupFunction({self.group}_{self.n}, {nz} nonzero values)"


def restricted_convolution(u: GroupFunction, v: GroupFunction, support: Iterable | None = None) -> GroupFunction:
    """``(u *_r v)(a) = sum over b in [e, a] of u(b) v(b^-1 a)``.

    Evaluated on ``support`` (default: the whole group).
    """
    if (u.group, u.n) != (v.group, v.n):
        raise DomainError("functions on different groups")
    if support is None:
        support = group_elements(u.group, u.n)
    out = {}
    for a in support:
        total = Fraction(0)
        for b in _interval_tuple(a):
            ub = u(b)
            if ub:
                total += ub * v(b.inverse() * a)
        out[a] = total
    return GroupFunction(u.group, u.n, out)


# ---------------------------------------------------------------------------
# text and JSON forms

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_permutation(x) -> str:
    cycles = [o for o in x.orbits() if len(o) > 1]
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(y) for y in c) + ")" for c in cycles)


def parse_permutation(text: str, n: int | None = None, group: str | None = None):
    """Parse cycle notation such as ``(1,3,4)(2,6)`` or ``(1,2,-1,-2)``.

    Singleton cycles are accepted; ``()`` or ``e`` is the identity.  The group
    defaults to W when a negative number occurs and ``n`` to the largest
    absolute value.
    """
    body = re.sub(r"\s+", "", text)
    if body in ("e", "ε"):
        body = "()"
    cycles = []
    for mt in _CYCLE_RE.finditer(body):
        if mt.group(1):
            cycles.append([int(t) for t in mt.group(1).split(",")])
    if _CYCLE_RE.sub("", body):
        raise StructureError(f"not cycle notation: {text!r}")
    flat = [x for c in cycles for x in c]
    if group is None:
        group = "W" if any(x < 0 for x in flat) else "S"
    if n is None:
        if not flat:
            raise StructureError("n is required to parse the identity")
        n = max(abs(x) for x in flat)
    return _cls(group).from_cycles(n, cycles)


def permutation_to_json(x) -> str:
    return json.dumps({"group": x.group, "n": x.n, "images": list(x.images)}, separators=(",", ":"))


def permutation_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return _cls(data["group"])(int(data["n"]), data["images"])
