"""Free independence of type B: construction, cumulant and moment testers.

Freely independent pairs are built by prescribing cumulants.  Each pair
``j`` contributes an algebra letter ``a<j>`` and a vector letter ``x<j>``.
Their pure cumulants are read off the prescribed R-transform, and every
cumulant mixing two pairs is zero.  Moments then follow from the
moment-cumulant formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..errors import DomainError, PreconditionError
from ..series import SeriesB
from .cumulants import cumulant_a, cumulant_a_prime, cumulant_b, linking_product, r_transform_b
from .spaces import FormalSpaceB, LinkingElement, Poly

__all__ = [
    "FreePairs",
    "FreenessReport",
    "make_free_pair",
    "make_free_pairs",
    "mixed_cumulant_check",
    "free_independence_moment_check",
    "r_sum_product",
]


@dataclass(frozen=True)
class FreePairs:
    """A space together with its marked pairs ``(a_j, ξ_j)``.

    ``labels`` maps each pair label to its (algebra letter, vector letter);
    the vector letter is None for type-A-only constructions.
    """

    space: FormalSpaceB
    marked: dict[str, LinkingElement]
    labels: dict[str, tuple[str, str | None]]
    prescriptions: dict[str, SeriesB] = field(default_factory=dict)


@dataclass(frozen=True)
class FreenessReport:
    passed: bool
    method: str
    depth: int
    checked: int
    witness: str | None
    space_id: int

    def __bool__(self) -> bool:
        return self.passed


def make_free_pairs(prescriptions: Mapping[str, SeriesB], N: int, vectors: bool = True) -> FreePairs:
    """Freely independent pairs whose R-transforms are the prescribed series (to order N).

    κ^(A)_n(a_j, ..., a_j) is the first component of the n-th coefficient.  The
    second component is split evenly over the n positions of the vector in
    κ^(A')_n.  Cumulants of order above N are zero, and so are all cumulants
    that mix two labels.  The degree bound is 2N, enough for the products.
    """
    if N < 1:
        raise DomainError("order must be at least 1")
    for label, R in prescriptions.items():
        if not isinstance(R, SeriesB):
            raise DomainError(f"prescription {label!r} is not a SeriesB")
        if R.order < N:
            raise DomainError(f"prescription {label!r} has order {R.order} < {N}")
        if not vectors and any(c.double_prime for c in R.coeffs[:N]):
            raise DomainError("second components must vanish when vectors=False")
    labels = {lab: (f"a{lab}", f"x{lab}" if vectors else None) for lab in prescriptions}
    owner = {}
    for lab, (a, x) in labels.items():
        owner[a] = lab
        if x:
            owner[x] = lab
    prescribed = {lab: R.truncate(N) for lab, R in prescriptions.items()}

    def letter_cumulant(word: tuple[str, ...]) -> Fraction:
        labs = {owner[w] for w in word}
        n = len(word)
        if len(labs) != 1 or n > N:
            return Fraction(0)
        coeff = prescribed[labs.pop()][n]
        if any(w.startswith("x") for w in word):
            return coeff.double_prime / n
        return coeff.prime

    space = FormalSpaceB.from_cumulants(
        [a for a, _ in labels.values()],
        [x for _, x in labels.values() if x],
        2 * N,
        letter_cumulant,
        classes=owner,
    )
    marked = {
        lab: LinkingElement(Poly.letter(a), Poly.letter(x) if x else Poly())
        for lab, (a, x) in labels.items()
    }
    return FreePairs(space, marked, labels, prescribed)


def make_free_pair(R1: SeriesB, R2: SeriesB, N: int, vectors: bool = True) -> FreePairs:
    """Two free pairs labelled ``"1"`` and ``"2"`` (letters a1, x1, a2, x2)."""
    return make_free_pairs({"1": R1, "2": R2}, N, vectors=vectors)


def _index_tuples(labels, n):
    for idx in itertools.product(list(labels), repeat=n):
        if len(set(idx)) > 1:
            yield idx


def mixed_cumulant_check(space, labels: Mapping[str, tuple[str, str | None]], depth: int) -> FreenessReport:
    """Evaluate every mixed cumulant of the generators up to order ``depth``.

    For each non-constant label tuple this checks κ^(A) of the algebra
    letters, κ^(A') with the vector letter in each slot, and κ^(B) of the
    linking elements.  The first nonzero value is reported as the witness.
    """
    checked = 0
    for n in range(2, depth + 1):
        for idx in _index_tuples(labels, n):
            algebra = [Poly.letter(labels[i][0]) for i in idx]
            val = cumulant_a(space, algebra)
            checked += 1
            if val:
                return FreenessReport(False, "cumulants", depth, checked,
                                      f"kappaA({','.join(labels[i][0] for i in idx)}) = {val}", id(space))
            pairs = []
            for m, i in enumerate(idx, start=1):
                x = labels[i][1]
                pairs.append(LinkingElement(algebra[m - 1], Poly.letter(x) if x else Poly()))
                if x is None:
                    continue
                args = algebra[: m - 1] + [Poly.letter(x)] + algebra[m:]
                val = cumulant_a_prime(space, m, args)
                checked += 1
                if val:
                    names = [labels[j][0] for j in idx]
                    names[m - 1] = x
                    return FreenessReport(False, "cumulants", depth, checked,
                                          f"kappaA'({','.join(names)}) = {val}", id(space))
            val = cumulant_b(space, pairs)
            checked += 1
            if val.prime or val.double_prime:
                return FreenessReport(False, "cumulants", depth, checked,
                                      f"kappaB over labels {','.join(idx)} = {val}", id(space))
    return FreenessReport(True, "cumulants", depth, checked, None, id(space))


def _alternating(labels, k):
    for idx in itertools.product(list(labels), repeat=k):
        if all(x != y for x, y in zip(idx, idx[1:])):
            yield idx


def _compositions(total_max, k):
    """Tuples of k positive integers with sum at most ``total_max``."""
    if k == 0:
        yield ()
        return
    for first in range(1, total_max - k + 2):
        for rest in _compositions(total_max - first, k - 1):
            yield (first,) + rest


def free_independence_moment_check(space, labels: Mapping[str, tuple[str, str | None]], depth: int) -> FreenessReport:
    """Check free independence through moments, up to total word length ``depth``.

    (i) ``φ(c_1 ... c_k) = 0`` for centered powers ``c_r = a^p - φ(a^p) I`` from
    alternating labels.  (ii) For ``ξ = a_h^s x_h a_h^t`` and centered powers
    ``a_m..a_1`` on the left and ``b_1..b_n`` on the right, with consecutive
    labels distinct, ``f(a_m ... a_1 ξ b_1 ... b_n)`` is 0 when m != n and
    otherwise ``prod δ(i_r, j_r) φ(a_r b_r) · f(ξ)``.
    """
    cache: dict = {}

    def centered(lab, p):
        key = (lab, p)
        if key not in cache:
            power = Poly.letter(labels[lab][0]) ** p
            cache[key] = power - Poly.scalar(space.phi(power))
        return cache[key]

    def product(xs):
        out = Poly.scalar(1)
        for x in xs:
            out = out * x
        return out

    checked = 0
    for k in range(1, depth + 1):
        for idx in _alternating(labels, k):
            for powers in _compositions(depth, k):
                val = space.phi(product(centered(i, p) for i, p in zip(idx, powers)))
                checked += 1
                if val:
                    desc = " ".join(f"c({labels[i][0]}^{p})" for i, p in zip(idx, powers))
                    return FreenessReport(False, "moments", depth, checked, f"phi({desc}) = {val}", id(space))

    with_vectors = [lab for lab, (_, x) in labels.items() if x]
    for h in with_vectors:
        a_h, x_h = labels[h]
        for s in range(depth):
            for t in range(depth - s):
                xi = Poly.word([a_h] * s + [x_h] + [a_h] * t)
                f_xi = space.f(xi)
                budget = depth - s - t - 1
                for m in range(budget + 1):
                    for n in range(budget - m + 1):
                        for left in _alternating(labels, m):
                            if m and left[0] == h:
                                continue
                            for right in _alternating(labels, n):
                                if n and right[0] == h:
                                    continue
                                for lp in _compositions(budget, m):
                                    for rp in _compositions(budget - sum(lp), n):
                                        a = [centered(i, p) for i, p in zip(left, lp)]
                                        b = [centered(j, q) for j, q in zip(right, rp)]
                                        word = product(list(reversed(a)) + [xi] + b)
                                        val = space.f(word)
                                        if m != n:
                                            expected = Fraction(0)
                                        else:
                                            expected = f_xi
                                            for r in range(m):
                                                if left[r] != right[r]:
                                                    expected = Fraction(0)
                                                    break
                                                expected *= space.phi(a[r] * b[r])
                                        checked += 1
                                        if val != expected:
                                            desc = (f"left={left}{lp} xi={a_h}^{s} {x_h} {a_h}^{t} "
                                                    f"right={right}{rp}")
                                            return FreenessReport(
                                                False, "moments", depth, checked,
                                                f"f({desc}) = {val}, expected {expected}", id(space))
    return FreenessReport(True, "moments", depth, checked, None, id(space))


def r_sum_product(space, pair1, pair2, N: int, certificate: FreenessReport | None) -> tuple[SeriesB, SeriesB]:
    """R-transforms of ``pair1 + pair2`` and of the linking product ``pair1 · pair2``.

    Requires a passing ``mixed_cumulant_check`` report for this space of depth
    at least N; for free pairs the results are ``R_1 + R_2`` and ``R_1 ⊠ R_2``.
    """
    if certificate is None or not isinstance(certificate, FreenessReport):
        raise PreconditionError("a freeness certificate from mixed_cumulant_check is required")
    if certificate.method != "cumulants" or not certificate.passed:
        raise PreconditionError("the freeness certificate did not pass")
    if certificate.space_id != id(space):
        raise PreconditionError("the certificate was issued for another space")
    if certificate.depth < N:
        raise PreconditionError(f"certificate depth {certificate.depth} is below the order {N}")
    p1, p2 = LinkingElement(*pair1), LinkingElement(*pair2)
    total = LinkingElement(p1.a + p2.a, p1.xi + p2.xi)
    prod = linking_product(space, [p1, p2])
    return r_transform_b(space, total, N), r_transform_b(space, prod, N)
