"""Order isomorphisms between NC lattices and Cayley-graph intervals.

A block ``{a_1 < ... < a_k}`` (ascending in the ground order) becomes the
cycle ``(a_1, ..., a_k)``.  This gives

* NC^(A)(n) onto ``[e, c]`` in S_n,
* NC^(B)(n) onto ``[ε, ω]`` in W_n,
* NC^(A)(n) onto ``[ε, γ]`` in W_n, through the doubled partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import (
    Permutation,
    SignedPermutation,
    gamma,
    leq,
    long_cycle,
    omega,
    word_length,
)
from .errors import DomainError
from .partitions import NCPartitionA, NCPartitionB

__all__ = [
    "DistinguishedElements",
    "distinguished",
    "iota_a",
    "iota_b",
    "iota",
    "iota_inverse",
    "iota_gamma",
    "length_identity_holds",
    "long_cycle",
    "omega",
    "gamma",
]


@dataclass(frozen=True)
class DistinguishedElements:
    n: int
    c: Permutation
    omega: SignedPermutation
    gamma: SignedPermutation


def distinguished(n: int) -> DistinguishedElements:
    return DistinguishedElements(n, long_cycle(n), omega(n), gamma(n))


def iota_a(p: NCPartitionA) -> Permutation:
    if not isinstance(p, NCPartitionA):
        raise DomainError("iota_a expects an NCPartitionA")
    return Permutation.from_cycles(p.n, p.blocks)


def iota_b(pi: NCPartitionB) -> SignedPermutation:
    if not isinstance(pi, NCPartitionB):
        raise DomainError("iota_b expects an NCPartitionB")
    return SignedPermutation.from_cycles(pi.n, pi.blocks)


def iota(p):
    """``iota_a`` or ``iota_b`` according to the partition type."""
    return iota_b(p) if isinstance(p, NCPartitionB) else iota_a(p)


def iota_gamma(p: NCPartitionA) -> SignedPermutation:
    """``ι({F_1, ..., F_k, -F_1, ..., -F_k})``, landing in ``[ε, γ]``."""
    if not isinstance(p, NCPartitionA):
        raise DomainError("iota_gamma expects an NCPartitionA")
    cycles = list(p.blocks) + [[-x for x in b] for b in p.blocks]
    return SignedPermutation.from_cycles(p.n, cycles)


def iota_inverse(sigma, target: str | None = None):
    """The partition whose blocks are the orbits of ``sigma``.

    ``target`` is ``"c"`` (default for S_n), ``"omega"`` (default for W_n) or
    ``"gamma"``; ``sigma`` must lie below it, otherwise ``DomainError``.
    """
    if isinstance(sigma, Permutation):
        target = target or "c"
        if target != "c":
            raise DomainError("a permutation of S_n can only be inverted against c")
        top = long_cycle(sigma.n)
    elif isinstance(sigma, SignedPermutation):
        target = target or "omega"
        if target not in ("omega", "gamma"):
            raise DomainError(f"unknown target {target!r}")
        top = omega(sigma.n) if target == "omega" else gamma(sigma.n)
    else:
        raise DomainError(f"not a group element: {sigma!r}")
    if not leq(sigma, top):
        raise DomainError(f"{sigma} is not in the interval below {top}")
    if target == "c":
        return NCPartitionA(sigma.n, sigma.orbits())
    if target == "omega":
        return NCPartitionB(sigma.n, sigma.orbits())
    return NCPartitionA(sigma.n, [o for o in sigma.orbits() if o[0] > 0])


def length_identity_holds(pi: NCPartitionB) -> bool:
    """``|ι(π)| + |ι(Kr π)| = n``, with ``ι(π) ι(Kr π) = ω``."""
    from .partitions import kreweras

    a, b = iota_b(pi), iota_b(kreweras(pi))
    return a * b == omega(pi.n) and word_length(a) + word_length(b) == pi.n
