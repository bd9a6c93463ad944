"""Truncated series, the dual numbers C, and boxed convolutions.

Series have no constant term and a fixed truncation order N; coefficients are
indexed from 1.  All arithmetic is exact (``fractions.Fraction``).

``boxconv_b`` sums over NC^(B)(m) literally.  ``boxconv_a_dual`` is the type-A
sum evaluated in C.  The two are kept separate so that their agreement can be
tested rather than assumed.
"""

from __future__ import annotations

import json
import random
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cayley import GroupFunction, identity, interval, omega, orbit_census, parse_permutation, restricted_convolution
from .errors import DomainError, NotInvertibleError, StructureError
from .partitions import enumerate_nca, enumerate_ncb, kreweras, zero_block

__all__ = [
    "DualScalar",
    "SeriesA",
    "SeriesB",
    "dual_mul",
    "boxconv_a",
    "boxconv_a_dual",
    "boxconv_b",
    "boxconv_b_inverse",
    "delta_a",
    "delta_b",
    "zeta_b",
    "u_alpha_a",
    "u_alpha_b",
    "bridge_check_a",
    "bridge_check_b",
    "w2_obstruction",
    "parse_series",
    "series_to_json",
    "format_series",
    "random_series_a",
    "random_series_b",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise StructureError(f"floating point value {x!r}; use an integer or a 'p/q' string")
    try:
        return Fraction(x)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"not a rational number: {x!r}") from exc


@dataclass(frozen=True)
class DualScalar:
    """An element ``(a', a'')`` of C, i.e. ``a' + a'' x`` with ``x**2 = 0``."""

    prime: Fraction
    double_prime: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "prime", _frac(self.prime))
        object.__setattr__(self, "double_prime", _frac(self.double_prime))

    @classmethod
    def coerce(cls, x) -> "DualScalar":
        if isinstance(x, DualScalar):
            return x
        if isinstance(x, (list, tuple)):
            if len(x) != 2:
                raise StructureError(f"a dual scalar needs two components, got {x!r}")
            return cls(x[0], x[1])
        return cls(x, 0)

    def __add__(self, other):
        other = DualScalar.coerce(other)
        return DualScalar(self.prime + other.prime, self.double_prime + other.double_prime)

    __radd__ = __add__

    def __neg__(self):
        return DualScalar(-self.prime, -self.double_prime)

    def __sub__(self, other):
        return self + (-DualScalar.coerce(other))

    def __mul__(self, other):
        other = DualScalar.coerce(other)
        return DualScalar(
            self.prime * other.prime,
            self.prime * other.double_prime + self.double_prime * other.prime,
        )

    __rmul__ = __mul__

    def inverse(self) -> "DualScalar":
        if self.prime == 0:
            raise NotInvertibleError(f"{self} is not a unit of C")
        return DualScalar(1 / self.prime, -self.double_prime / self.prime**2)

    def __truediv__(self, other):
        return self * DualScalar.coerce(other).inverse()

    def __pow__(self, k: int):
        out = DualScalar(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def to_json(self) -> list[str]:
        return [_fmt(self.prime), _fmt(self.double_prime)]

    def __str__(self) -> str:
        return f"({_fmt(self.prime)},{_fmt(self.double_prime)})"


def dual_mul(x: DualScalar, y: DualScalar) -> DualScalar:
    return DualScalar.coerce(x) * DualScalar.coerce(y)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class _Series:
    __slots__ = ("coeffs",)
    _coerce = staticmethod(_frac)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(self._coerce(c) for c in coeffs)
        if not coeffs:
            raise DomainError("a truncated series needs order N >= 1")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        """Coefficient of ``z**n`` (1-based)."""
        if not 1 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside 1..{self.order}")
        return self.coeffs[n - 1]

    def truncate(self, order: int):
        if not 1 <= order <= self.order:
            raise DomainError(f"cannot truncate order {self.order} series to {order}")
        return type(self)(self.coeffs[:order])

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.order != self.order:
            raise DomainError(f"truncation orders differ: {self.order} vs {other.order}")
        return type(self)(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({series_to_json(self)})"


class SeriesA(_Series):
    """``sum_{n=1}^N alpha_n z^n`` with rational coefficients."""

    __slots__ = ()


class SeriesB(_Series):
    """``sum_{n=1}^N (alpha'_n, alpha''_n) z^n`` with coefficients in C."""

    __slots__ = ()
    _coerce = staticmethod(DualScalar.coerce)

    def prime(self) -> SeriesA:
        return SeriesA(c.prime for c in self.coeffs)

    def double_prime(self) -> SeriesA:
        return SeriesA(c.double_prime for c in self.coeffs)


def delta_a(order: int) -> SeriesA:
    """The unit ``Δ(z) = z``."""
    return SeriesA([1] + [0] * (order - 1))


def delta_b(order: int) -> SeriesB:
    """The unit ``Δ'(z) = (1,0) z``."""
    return SeriesB([(1, 0)] + [(0, 0)] * (order - 1))


def zeta_b(order: int) -> SeriesB:
    """``ζ'(z) = sum (1,0) z^n``."""
    return SeriesB([(1, 0)] * order)


def _same_order(f, g, cls) -> None:
    if not isinstance(f, cls) or not isinstance(g, cls):
        raise DomainError(f"expected two {cls.__name__} operands")
    if f.order != g.order:
        raise DomainError(f"truncation orders differ: {f.order} vs {g.order}")


@lru_cache(maxsize=None)
def _type_a_terms(m: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Block-size profiles ``(sizes of p, sizes of Kr p, multiplicity)`` over NC^(A)(m)."""
    tally = Counter()
    for p in enumerate_nca(m):
        tally[(tuple(sorted(p.block_sizes())), tuple(sorted(kreweras(p).block_sizes())))] += 1
    return tuple((a, b, k) for (a, b), k in sorted(tally.items()))


def _pair_sizes(pi) -> tuple[tuple[int, ...], int | None]:
    z = zero_block(pi)
    pairs = sorted(len(b) for b in pi.blocks if -b[0] not in b and min(b, key=abs) > 0)
    return tuple(pairs), (len(z) // 2 if z is not None else None)


@lru_cache(maxsize=None)
def _type_b_terms(m: int):
    """Profiles over NC^(B)(m): ``(pairs of π, zero half-size of π, pairs of Kr π, zero half-size of Kr π, multiplicity)``."""
    tally = Counter()
    for pi in enumerate_ncb(m):
        tally[_pair_sizes(pi) + _pair_sizes(kreweras(pi))] += 1
    return tuple(k + (v,) for k, v in sorted(tally.items(), key=lambda kv: repr(kv[0])))


def _boxconv_generic(alpha: Sequence, beta: Sequence, one):
    out = []
    for m in range(1, len(alpha) + 1):
        total = one * 0
        for fs, es, mult in _type_a_terms(m):
            term = one
            for s in fs:
                term = term * alpha[s - 1]
            for s in es:
                term = term * beta[s - 1]
            total = total + term * mult
        out.append(total)
    return out


def boxconv_a(f: SeriesA, g: SeriesA) -> SeriesA:
    """Type-A boxed convolution: ``γ_n`` sums over p in NC^(A)(n), α over p and β over Kr(p)."""
    _same_order(f, g, SeriesA)
    return SeriesA(_boxconv_generic(f.coeffs, g.coeffs, Fraction(1)))


def boxconv_a_dual(f: SeriesB, g: SeriesB) -> SeriesB:
    """The type-A summation with every product taken in C."""
    _same_order(f, g, SeriesB)
    return SeriesB(_boxconv_generic(f.coeffs, g.coeffs, DualScalar(1, 0)))


def boxconv_b(f: SeriesB, g: SeriesB) -> SeriesB:
    """Type-B boxed convolution by direct summation over NC^(B)(m).

    ``γ'_m`` is the type-A sum on first components.  ``γ''_m`` collects, over
    π in NC^(B)(m), one factor ``α'`` per pair ``X, -X`` of π and one ``β'``
    per pair of Kr(π), together with ``α''`` of the zero-block of π or
    ``β''`` of the zero-block of Kr(π), whichever exists.
    """
    _same_order(f, g, SeriesB)
    a1 = [c.prime for c in f.coeffs]
    a2 = [c.double_prime for c in f.coeffs]
    b1 = [c.prime for c in g.coeffs]
    b2 = [c.double_prime for c in g.coeffs]
    primes = _boxconv_generic(a1, b1, Fraction(1))
    out = []
    for m in range(1, f.order + 1):
        total = Fraction(0)
        for xs, zp, ys, zk, mult in _type_b_terms(m):
            term = Fraction(mult)
            for s in xs:
                term *= a1[s - 1]
            for s in ys:
                term *= b1[s - 1]
            term *= a2[zp - 1] if zp is not None else b2[zk - 1]
            total += term
        out.append(DualScalar(primes[m - 1], total))
    return SeriesB(out)


def boxconv_b_inverse(f: SeriesB) -> SeriesB:
    """The two-sided inverse of ``f`` for the type-B boxed convolution.

    Coefficient n of ``f * g`` is ``α_1^n g_n`` plus terms in ``g_1..g_{n-1}``,
    so g is found order by order; this needs ``α'_1 != 0``.
    """
    if not isinstance(f, SeriesB):
        raise DomainError("expected a SeriesB")
    a1 = f.coeffs[0]
    if a1.prime == 0:
        raise NotInvertibleError("first coefficient has zero first component")
    N = f.order
    g = [DualScalar(0, 0)] * N
    for n in range(1, N + 1):
        g[n - 1] = DualScalar(0, 0)
        rest = _boxconv_generic(f.coeffs[:n], g[:n], DualScalar(1, 0))[n - 1]
        target = DualScalar(1 if n == 1 else 0, 0)
        g[n - 1] = (target - rest) / a1**n
    return SeriesB(g)


# ---------------------------------------------------------------------------
# multiplicative functions on S_n and W_n


def u_alpha_a(alpha, t) -> Fraction:
    """``prod_m alpha_m ** k_m(t)`` with ``k_m`` the number of orbits of size m."""
    coeffs = alpha.coeffs if isinstance(alpha, SeriesA) else [_frac(a) for a in alpha]
    if len(coeffs) < t.n:
        raise DomainError(f"need {t.n} coefficients, got {len(coeffs)}")
    out = Fraction(1)
    for m, k in enumerate(orbit_census(t).k, start=1):
        if k:
            out *= coeffs[m - 1] ** k
    return out


def u_alpha_b(alpha, tau) -> Fraction:
    """``prod_m (alpha'_m)**k_m (alpha''_m)**l_m``.

    ``k_m`` counts pairs of non-invariant orbits of size m and ``l_m`` counts
    invariant orbits of size 2m.
    """
    coeffs = alpha.coeffs if isinstance(alpha, SeriesB) else [DualScalar.coerce(a) for a in alpha]
    if len(coeffs) < tau.n:
        raise DomainError(f"need {tau.n} coefficients, got {len(coeffs)}")
    census = orbit_census(tau)
    out = Fraction(1)
    for m in range(1, tau.n + 1):
        k, l = census.k[m - 1], census.l[m - 1]
        if k:
            out *= coeffs[m - 1].prime ** k
        if l:
            out *= coeffs[m - 1].double_prime ** l
    return out


def _u_function(alpha, group: str, n: int) -> GroupFunction:
    u = u_alpha_a if group == "S" else u_alpha_b
    return GroupFunction.lazy(group, n, lambda x: u(alpha, x))


@dataclass(frozen=True)
class BridgeReport:
    holds: bool
    checked: int
    counterexample: str | None = None


def bridge_check_a(alpha, beta, n: int) -> BridgeReport:
    """Compare ``u_α *_r u_β`` with ``u_γ`` on all of S_n, ``γ = α ⊠ β``."""
    alpha, beta = SeriesA(alpha[:n] if not isinstance(alpha, SeriesA) else alpha.coeffs[:n]), \
        SeriesA(beta[:n] if not isinstance(beta, SeriesA) else beta.coeffs[:n])
    gam = boxconv_a(alpha, beta)
    from .cayley import group_elements

    conv = restricted_convolution(_u_function(alpha, "S", n), _u_function(beta, "S", n), group_elements("S", n))
    count = 0
    for t, v in conv.values.items():
        count += 1
        if v != u_alpha_a(gam, t):
            return BridgeReport(False, count, str(t))
    return BridgeReport(True, count)


def bridge_check_b(alpha, beta, n: int, on: str = "interval") -> BridgeReport:
    """Compare ``u_α *_r u_β`` with ``u_γ``, ``γ = α ⊠^(B) β``.

    ``on="interval"`` checks every element of ``[ε, ω]``; ``on="group"`` checks
    all of W_n, where the identity is not expected to hold.
    """
    alpha = SeriesB(alpha.coeffs[:n] if isinstance(alpha, SeriesB) else list(alpha)[:n])
    beta = SeriesB(beta.coeffs[:n] if isinstance(beta, SeriesB) else list(beta)[:n])
    gam = boxconv_b(alpha, beta)
    if on == "interval":
        support = list(interval(omega(n)))
    elif on == "group":
        from .cayley import group_elements

        support = list(group_elements("W", n))
    else:
        raise DomainError(f"unknown support {on!r}")
    conv = restricted_convolution(_u_function(alpha, "W", n), _u_function(beta, "W", n), support)
    for count, tau in enumerate(support, start=1):
        if conv(tau) != u_alpha_b(gam, tau):
            return BridgeReport(False, count, str(tau))
    return BridgeReport(True, len(support))


def w2_obstruction(u) -> Fraction:
    """``u(ε) u(τ) - u(τ_1) u(τ_2)`` for ``τ_1 = (1,-1)``, ``τ_2 = (2,-2)``, ``τ = τ_1 τ_2`` in W_2.

    Vanishes for every ``u_α``; generically nonzero for ``u_α *_r u_β``.
    """
    t1 = parse_permutation("(1,-1)", n=2)
    t2 = parse_permutation("(2,-2)", n=2)
    return u(identity("W", 2)) * u(t1 * t2) - u(t1) * u(t2)


# ---------------------------------------------------------------------------
# literals


def parse_series(text_or_data, order: int | None = None):
    """Parse ``[1,2,5]`` (type A) or ``[[1,0],[2,3]]`` (type B).

    Entries may be integers or ``"p/q"`` strings.  With ``order`` given the
    literal must have exactly that many coefficients.
    """
    if isinstance(text_or_data, str):
        # bare p/q tokens are accepted and read as strings
        text = re.sub(r'(?<!["\w/])(-?\d+/\d+)(?![\w/"])', r'"\1"', text_or_data)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructureError(f"not a series literal: {text_or_data!r}") from exc
    else:
        data = text_or_data
    if not isinstance(data, list) or not data:
        raise StructureError("a series literal is a non-empty JSON array")
    if all(isinstance(c, list) for c in data):
        s = SeriesB(data)
    elif not any(isinstance(c, list) for c in data):
        s = SeriesA(data)
    else:
        raise StructureError("mixed scalar and pair coefficients")
    if order is not None and s.order != order:
        raise DomainError(f"literal has {s.order} coefficients, --order is {order}")
    return s


def format_series(s) -> str:
    """Compact literal such as ``[1,3/2]`` or ``[[1,0],[2,-1/3]]``; re-parsable by ``parse_series``."""
    if isinstance(s, SeriesB):
        return "[" + ",".join(f"[{_fmt(c.prime)},{_fmt(c.double_prime)}]" for c in s.coeffs) + "]"
    return "[" + ",".join(_fmt(c) for c in s.coeffs) + "]"


def series_to_json(s) -> list:
    if isinstance(s, SeriesB):
        return [c.to_json() for c in s.coeffs]
    return [_fmt(c) for c in s.coeffs]


def _random_fraction(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_series_a(order: int, rng: random.Random, first: Fraction | None = None) -> SeriesA:
    coeffs = [_random_fraction(rng) for _ in range(order)]
    if first is not None:
        coeffs[0] = Fraction(first)
    return SeriesA(coeffs)


def random_series_b(order: int, rng: random.Random, first: DualScalar | None = None) -> SeriesB:
    coeffs = [DualScalar(_random_fraction(rng), _random_fraction(rng)) for _ in range(order)]
    if first is not None:
        coeffs[0] = DualScalar.coerce(first)
    return SeriesB(coeffs)
