"""Non-crossing cumulants of types A, A' and B.

All three families are obtained by the same inversion of the moment-cumulant
formula: ``κ_n(x) = E(x_1 ... x_n) - sum over p != 1_n of κ_p(x)``.  Only the
expectation changes.  It is ``φ`` for type A, ``f`` on the block holding the
vector for type A', and ``E(a, ξ) = (φ(a), f(ξ))`` with values in C for type B.
Sub-results are memoized per call, keyed by the argument values at the
selected positions, so repeated arguments are evaluated once.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Sequence

from ..errors import DomainError
from ..partitions import NCPartitionA, enumerate_nca
from ..series import DualScalar, SeriesA, SeriesB
from .spaces import LinkingElement

__all__ = [
    "cumulant_a",
    "cumulant_a_prime",
    "cumulant_unified",
    "cumulant_partition",
    "cumulant_b",
    "moments_from_cumulants_a",
    "cumulants_from_moments_a",
    "linking_product",
    "expectation_b",
    "moment_series_a",
    "r_transform_a",
    "moment_series_b",
    "r_transform_b",
]


@lru_cache(maxsize=None)
def _proper_nc(k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """0-based blocks of every p in NC(k) other than 1_k."""
    out = []
    for p in enumerate_nca(k):
        if p.blno() > 1:
            out.append(tuple(tuple(x - 1 for x in b) for b in p.blocks))
    return tuple(out)


def _canonical_labels(args: Sequence) -> list[int]:
    labels, seen = [], {}
    for i, x in enumerate(args):
        try:
            labels.append(seen.setdefault(x, i))
        except TypeError:
            # unhashable elements (numpy arrays): fall back to identity
            labels.append(seen.setdefault(("id", id(x)), i))
    return labels


def _invert(args: Sequence, moment: Callable[[tuple[int, ...]], object], one, extra_key=None):
    labels = _canonical_labels(args)
    memo: dict = {}

    def kappa(S: tuple[int, ...]):
        key = tuple(labels[i] for i in S) if extra_key is None else \
            (tuple(labels[i] for i in S), extra_key(S))
        if key in memo:
            return memo[key]
        total = moment(S)
        for blocks in _proper_nc(len(S)):
            term = one
            for b in blocks:
                term = term * kappa(tuple(S[i] for i in b))
            total = total - term
        memo[key] = total
        return total

    return kappa(tuple(range(len(args))))


def _product(space, xs):
    return reduce(space.mul, xs)


def _check_args(args) -> None:
    if len(args) == 0:
        raise DomainError("cumulants need at least one argument")


def cumulant_a(space, args: Sequence) -> Fraction:
    """κ^(A)_n(a_1, ..., a_n)."""
    _check_args(args)
    args = list(args)
    return _invert(args, lambda S: space.phi(_product(space, [args[i] for i in S])), Fraction(1))


def cumulant_a_prime(space, m: int, args: Sequence) -> Fraction:
    """κ^(A')_{n;m}: cumulant whose m-th argument (1-based) is a vector."""
    _check_args(args)
    n = len(args)
    if not 1 <= m <= n:
        raise DomainError(f"vector position {m} outside 1..{n}")
    args = list(args)
    if not space.is_vector(args[m - 1]):
        raise DomainError(f"argument {m} is not a vector")
    for i, x in enumerate(args):
        if i != m - 1 and space.is_vector(x):
            raise DomainError(f"argument {i + 1} is a vector; only position {m} may be")

    def moment(S):
        prod = _product(space, [args[i] for i in S])
        return space.f(prod) if (m - 1) in S else space.phi(prod)

    return _invert(args, moment, Fraction(1), extra_key=lambda S: (m - 1) in S)


def cumulant_unified(space, xs: Sequence) -> Fraction:
    """κ^(A') in unified notation: type A when no argument is a vector."""
    vec = [i for i, x in enumerate(xs) if space.is_vector(x)]
    if not vec:
        return cumulant_a(space, xs)
    if len(vec) > 1:
        raise DomainError("at most one argument may be a vector")
    return cumulant_a_prime(space, vec[0] + 1, xs)


def cumulant_partition(space, p: NCPartitionA, xs: Sequence) -> Fraction:
    """κ^(A')_p(x_1, ..., x_n): product over blocks of p of the restricted cumulants."""
    if p.n != len(xs):
        raise DomainError("partition size and argument count differ")
    out = Fraction(1)
    for b in p.blocks:
        out *= cumulant_unified(space, [xs[i - 1] for i in b])
    return out


def _as_pair(x) -> LinkingElement:
    if isinstance(x, LinkingElement):
        return x
    a, xi = x
    return LinkingElement(a, xi)


def linking_product(space, pairs: Sequence) -> LinkingElement:
    """``(a_1 ... a_n, sum_m a_1 ... a_{m-1} ξ_m a_{m+1} ... a_n)``."""
    _check_args(pairs)
    pairs = [_as_pair(p) for p in pairs]
    a, xi = pairs[0].a, pairs[0].xi
    for p in pairs[1:]:
        a, xi = space.mul(a, p.a), space.add(space.mul(a, p.xi), space.mul(xi, p.a))
    return LinkingElement(a, xi)


def expectation_b(space, pair) -> DualScalar:
    """``E((a, ξ)) = (φ(a), f(ξ))``."""
    pair = _as_pair(pair)
    return DualScalar(space.phi(pair.a), space.f(pair.xi))


def cumulant_b(space, pairs: Sequence, method: str = "recursion") -> DualScalar:
    """κ^(B)_n of linking elements, with values in C.

    ``method="recursion"`` inverts the C-valued moment-cumulant formula
    directly.  ``method="componentwise"`` returns
    ``(κ^(A)_n(a_1..a_n), sum_m κ^(A')_n(a_1, .., ξ_m, .., a_n))``.
    """
    _check_args(pairs)
    pairs = [_as_pair(p) for p in pairs]
    if method == "recursion":
        return _invert(
            pairs,
            lambda S: expectation_b(space, linking_product(space, [pairs[i] for i in S])),
            DualScalar(1, 0),
        )
    if method == "componentwise":
        algebra = [p.a for p in pairs]
        first = cumulant_a(space, algebra)
        second = Fraction(0)
        for m, p in enumerate(pairs, start=1):
            if not space.is_vector(p.xi):
                continue  # zero vector: contributes nothing by linearity
            args = algebra[: m - 1] + [p.xi] + algebra[m:]
            second += cumulant_a_prime(space, m, args)
        return DualScalar(first, second)
    raise DomainError(f"unknown method {method!r}")


def moments_from_cumulants_a(kappas: Sequence) -> list[Fraction]:
    """``m_n = sum over p in NC(n) of prod_F κ_{|F|}`` for n = 1..len(kappas)."""
    kappas = [Fraction(k) for k in kappas]
    out = []
    for n in range(1, len(kappas) + 1):
        total = Fraction(0)
        for p in enumerate_nca(n):
            term = Fraction(1)
            for s in p.block_sizes():
                term *= kappas[s - 1]
            total += term
        out.append(total)
    return out


def cumulants_from_moments_a(moments: Sequence) -> list[Fraction]:
    """Inverse of ``moments_from_cumulants_a`` (single-variable cumulants)."""
    moments = [Fraction(m) for m in moments]
    kappas: list[Fraction] = []
    for n in range(1, len(moments) + 1):
        rest = Fraction(0)
        for p in enumerate_nca(n):
            if p.blno() == 1:
                continue
            term = Fraction(1)
            for s in p.block_sizes():
                term *= kappas[s - 1]
            rest += term
        kappas.append(moments[n - 1] - rest)
    return kappas


def moment_series_a(space, a, N: int) -> SeriesA:
    """``sum φ(a^n) z^n`` up to order N."""
    out, power = [], None
    for _ in range(N):
        power = a if power is None else space.mul(power, a)
        out.append(space.phi(power))
    return SeriesA(out)


def r_transform_a(space, a, N: int) -> SeriesA:
    """``sum κ^(A)_n(a, ..., a) z^n`` up to order N."""
    return SeriesA(cumulants_from_moments_a(moment_series_a(space, a, N).coeffs))


def moment_series_b(space, pair, N: int) -> SeriesB:
    """``M(z) = sum E((a, ξ)^n) z^n`` up to order N."""
    pair = _as_pair(pair)
    out, power = [], None
    for _ in range(N):
        power = pair if power is None else linking_product(space, [power, pair])
        out.append(expectation_b(space, power))
    return SeriesB(out)


def r_transform_b(space, pair, N: int) -> SeriesB:
    """``R(z) = sum κ^(B)_n((a, ξ), ..., (a, ξ)) z^n`` up to order N."""
    if N < 1:
        raise DomainError("order must be at least 1")
    pair = _as_pair(pair)
    moments = moment_series_b(space, pair, N).coeffs
    kappas: list[DualScalar] = []
    for n in range(1, N + 1):
        rest = DualScalar(0, 0)
        for blocks in _proper_nc(n):
            term = DualScalar(1, 0)
            for b in blocks:
                term = term * kappas[len(b) - 1]
            rest = rest + term
        kappas.append(moments[n - 1] - rest)
    return SeriesB(kappas)
