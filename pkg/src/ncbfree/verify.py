"""Named property checks, shared by the ``verify`` subcommand and the test suite.

Every check is deterministic in its parameters (including ``seed``) and
returns a :class:`VerificationReport`.  A failing report carries a
counterexample string that names the offending object.
"""

from __future__ import annotations

import inspect
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import cayley, embed, partitions, series
from .cayley import interval, leq, long_cycle, omega, word_length
from .errors import DomainError
from .freeprob import cumulants as cu
from .freeprob import freeness as fr
from .freeprob.spaces import FormalSpaceB, LinkingElement, MatrixSpaceA, Poly
from .partitions import abs_map, catalan, enumerate_nca, enumerate_ncb, kreweras, refinement_leq
from .series import DualScalar, SeriesB, boxconv_a, boxconv_a_dual, boxconv_b, boxconv_b_inverse

__all__ = ["VerificationReport", "PROPERTIES", "run", "property_ids"]


@dataclass
class VerificationReport:
    property: str
    params: dict
    verdict: str
    counterexample: str | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "params": self.params,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "elapsed": round(self.elapsed, 3),
            "details": self.details,
        }


class _Fail(Exception):
    pass


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise _Fail(what)


def _frac(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        if q or not nonzero:
            return q


def _series_b(rng, order, nonzero=False) -> SeriesB:
    return SeriesB([DualScalar(_frac(rng, nonzero), _frac(rng, nonzero)) for _ in range(order)])


# ---------------------------------------------------------------------------
# partitions


def check_cardinality_a(n: int = 10, **_) -> dict:
    for k in range(1, n + 1):
        count = sum(1 for _ in enumerate_nca(k))
        _require(count == catalan(k), f"|NC^A({k})| = {count}, expected {catalan(k)}")
    return {"checked": list(range(1, n + 1))}


def check_cardinality_b(n: int = 8, **_) -> dict:
    for k in range(1, n + 1):
        seen = set(enumerate_ncb(k))
        _require(len(seen) == math.comb(2 * k, k), f"|NC^B({k})| = {len(seen)}, expected {math.comb(2 * k, k)}")
    return {"checked": list(range(1, n + 1))}


def check_abs_cover(n: int = 6, **_) -> dict:
    sizes = {}
    for k in range(1, n + 1):
        union = set()
        for p in enumerate_nca(k):
            fib = partitions.abs_fiber(p)
            _require(len(fib) == k + 1 and len(set(fib)) == k + 1, f"fiber of {p} has {len(set(fib))} elements")
            for pi in fib:
                _require(abs_map(pi) == p, f"Abs({pi}) != {p}")
                _require(pi not in union, f"{pi} lies in two fibers")
                union.add(pi)
        _require(len(union) == math.comb(2 * k, k), f"fibers of NC^A({k}) cover {len(union)} partitions")
        sizes[k] = k + 1
    return {"fiber_sizes": sizes}


def check_kreweras(n: int = 5, **_) -> dict:
    for k in range(1, n + 1):
        for p in enumerate_nca(k):
            q = kreweras(p)
            _require(kreweras(q, "left") == p and kreweras(kreweras(p, "left")) == p, f"Kr'Kr != id at {p}")
            _require(p.blno() + q.blno() == k + 1, f"block count identity fails at {p}")
        for pi in enumerate_ncb(k):
            rho = kreweras(pi)
            _require(kreweras(rho, "left") == pi, f"Kr'Kr != id at {pi}")
            _require(pi.blno() + rho.blno() == 2 * k + 1, f"type-B block count identity fails at {pi}")
            _require(kreweras(abs_map(pi)) == abs_map(rho), f"Kr Abs != Abs Kr at {pi}")
    return {}


# ---------------------------------------------------------------------------
# Cayley graphs and embeddings


def check_iota(n: int = 5, n_b: int = 4, **_) -> dict:
    for k in range(1, n + 1):
        c = long_cycle(k)
        parts = list(enumerate_nca(k))
        images = [embed.iota_a(p) for p in parts]
        _require(set(images) == set(interval(c)) and len(set(images)) == len(parts), f"ι_A(NC({k})) != [e,c]")
        for p, s in zip(parts, images):
            _require(embed.iota_a(kreweras(p)) == s.inverse() * c, f"ι(Kr p) != ι(p)^-1 c at {p}")
            _require(embed.iota_a(kreweras(p, "left")) == c * s.inverse(), f"ι(Kr' p) != c ι(p)^-1 at {p}")
            _require(embed.iota_inverse(s) == p, f"ι^-1 ι != id at {p}")
            for q, t in zip(parts, images):
                _require(refinement_leq(p, q) == leq(s, t), f"order not preserved at {p}, {q}")
    for k in range(1, n_b + 1):
        w = omega(k)
        parts = list(enumerate_ncb(k))
        images = [embed.iota_b(p) for p in parts]
        _require(set(images) == set(interval(w)) and len(set(images)) == len(parts), f"ι_B(NC^B({k})) != [ε,ω]")
        for p, s in zip(parts, images):
            kr = embed.iota_b(kreweras(p))
            _require(s * kr == w, f"ι(π) ι(Kr π) != ω at {p}")
            _require(word_length(s) + word_length(kr) == k, f"length identity fails at {p}")
            _require(embed.iota_inverse(s) == p, f"ι^-1 ι != id at {p}")
            for q, t in zip(parts, images):
                _require(refinement_leq(p, q) == leq(s, t), f"order not preserved at {p}, {q}")
        gam = set(interval(cayley.gamma(k)))
        _require(gam == {embed.iota_gamma(p) for p in enumerate_nca(k)}, f"ι_γ(NC({k})) != [ε,γ]")
    return {"interval_sizes": {k: len(list(interval(omega(k)))) for k in range(1, n_b + 1)}}


def check_word_length(n: int = 4, group: str = "S", **_) -> dict:
    dist = cayley.cayley_distances(group, n)
    for x, d in dist.items():
        _require(word_length(x) == d, f"|{x}| = {word_length(x)} but BFS distance {d}")
    total = math.factorial(n) * (2**n if group == "W" else 1)
    _require(len(dist) == total, f"BFS reached {len(dist)} of {total} elements")
    return {"elements": len(dist)}


def _invariant_orbits(x) -> int:
    return sum(1 for o in x.orbits() if -o[0] in o) if x.group == "W" else 0


def check_covers(n: int = 3, group: str = "W", **_) -> dict:
    els = list(cayley.group_elements(group, n))
    cases: dict = {}
    for a in els:
        for b in els:
            case = cayley.cover_case(a, b)
            _require((case is not None) == cayley.covers_metric(a, b), f"cover mismatch at {a} < {b}")
            if case:
                cases[case] = cases.get(case, 0) + 1
                _require(_invariant_orbits(a) <= _invariant_orbits(b),
                         f"invariant orbit count drops from {a} to {b}")
    return {"cover_cases": cases}


def check_interval_factorization(n: int = 4, **_) -> dict:
    for tau in interval(omega(n)):
        if tau.is_identity():
            continue
        facs = cayley.interval_factorize(tau)
        size = len(list(interval(tau)))
        _require(cayley.predicted_interval_size(facs) == size, f"factor sizes disagree at {tau}")
        fac = cayley.cycle_factorization_b(tau)
        _require(fac.product() == tau, f"factors do not multiply back to {tau}")
        # each σ ≤ τ is recovered from its restrictions to the supports, uniquely
        seen = set()
        for sigma in interval(tau):
            parts = tuple(cayley.restrict(sigma, s) for s in fac.supports)
            _require(parts not in seen, f"two elements below {tau} share factors")
            seen.add(parts)
            prod = cayley.identity("W", n)
            for p in parts:
                prod = prod * p
            _require(prod == sigma, f"{sigma} is not the product of its factors")
    return {}


# ---------------------------------------------------------------------------
# series


def check_bridge(n: int = 3, samples: int = 20, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = _series_b(rng, n), _series_b(rng, n)
        rep = series.bridge_check_b(a, b, n)
        _require(rep.holds, f"bridge fails at {rep.counterexample} for α={a}, β={b}")
    return {"interval_size": len(list(interval(omega(n))))}


def check_w2_control(samples: int = 20, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = _series_b(rng, 2, nonzero=True), _series_b(rng, 2, nonzero=True)
        ua = cayley.GroupFunction.lazy("W", 2, lambda x: series.u_alpha_b(a, x))
        ub = cayley.GroupFunction.lazy("W", 2, lambda x: series.u_alpha_b(b, x))
        _require(series.w2_obstruction(ua) == 0, f"u_α violates the W_2 relation for α={a}")
        conv = cayley.restricted_convolution(ua, ub)
        _require(series.w2_obstruction(conv) != 0, f"u_α *_r u_β satisfies the W_2 relation for α={a}, β={b}")
        _require(not series.bridge_check_b(a, b, 2, on="group").holds, f"bridge holds on all of W_2 for α={a}, β={b}")
    return {}


def check_theorem_5_3(order: int = 7, samples: int = 50, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        f, g = _series_b(rng, order), _series_b(rng, order)
        _require(boxconv_b(f, g) == boxconv_a_dual(f, g), f"⊠^B != ⊠^A_C at f={f}, g={g}")
    return {}


def check_boxconv_b_algebra(order: int = 5, samples: int = 20, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    unit = series.delta_b(order)
    for _ in range(samples):
        f, g, h = (_series_b(rng, order) for _ in range(3))
        _require(boxconv_b(boxconv_b(f, g), h) == boxconv_b(f, boxconv_b(g, h)), f"not associative at {f}, {g}, {h}")
        _require(boxconv_b(f, unit) == f == boxconv_b(unit, f), f"Δ' is not a unit for {f}")
        f1 = SeriesB([DualScalar(1, _frac(rng))] + list(f.coeffs[1:]))
        inv = boxconv_b_inverse(f1)
        _require(boxconv_b(f1, inv) == unit == boxconv_b(inv, f1), f"inverse round trip fails for {f1}")
    zeta = series.zeta_b(order)
    zinv = boxconv_b_inverse(zeta)
    _require(boxconv_b(zeta, zinv) == unit == boxconv_b(zinv, zeta), "ζ' inverse round trip fails")
    return {"zeta_inverse": series.series_to_json(zinv)}


def check_eq_5_4(samples: int = 10, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        a = [_frac(rng) for _ in range(3)]
        b = [_frac(rng) for _ in range(3)]
        g = boxconv_a(series.SeriesA(a), series.SeriesA(b))
        expected = [
            a[0] * b[0],
            a[1] * b[0] ** 2 + a[0] ** 2 * b[1],
            a[2] * b[0] ** 3 + 3 * a[0] * a[1] * b[0] * b[1] + a[0] ** 3 * b[2],
        ]
        _require(list(g.coeffs) == expected, f"low-order formulas fail at α={a}, β={b}")
    return {}


# ---------------------------------------------------------------------------
# cumulants


def _random_space(rng, bound=6) -> FormalSpaceB:
    return FormalSpaceB.random(["a", "b"], ["x"], bound, rng)


def _random_algebra(rng) -> Poly:
    return Poly({("a",): _frac(rng), ("b",): _frac(rng), (): _frac(rng)})


def _random_vector(rng) -> Poly:
    return Poly({("x",): _frac(rng, nonzero=True)})


def check_cumulant_formulas(samples: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    M = MatrixSpaceA(3)
    for _ in range(samples):
        for space, make in ((M, lambda: M.random(rng)), (_random_space(rng), lambda: _random_algebra(rng))):
            a1, a2, a3 = make(), make(), make()
            phi, mul = space.phi, space.mul
            _require(cu.cumulant_a(space, [a1]) == phi(a1), "κ_1 != φ")
            _require(cu.cumulant_a(space, [a1, a2]) == phi(mul(a1, a2)) - phi(a1) * phi(a2), "κ_2 formula fails")
            k3 = (phi(mul(mul(a1, a2), a3)) - phi(a1) * phi(mul(a2, a3)) - phi(mul(a1, a3)) * phi(a2)
                  - phi(mul(a1, a2)) * phi(a3) + 2 * phi(a1) * phi(a2) * phi(a3))
            _require(cu.cumulant_a(space, [a1, a2, a3]) == k3, "κ_3 formula fails")
        space = _random_space(rng)
        a, a2, xi, eta = _random_algebra(rng), _random_algebra(rng), _random_vector(rng), _random_vector(rng)
        phi, f = space.phi, space.f
        _require(cu.cumulant_b(space, [(a, xi)]) == DualScalar(phi(a), f(xi)), "κ^B_1 != E")
        k2 = DualScalar(phi(a * a2) - phi(a) * phi(a2), f(a * eta) - phi(a) * f(eta) + f(xi * a2) - f(xi) * phi(a2))
        _require(cu.cumulant_b(space, [(a, xi), (a2, eta)]) == k2, "κ^B_2 formula fails")
        _require(cu.cumulant_a_prime(space, 1, [xi, a]) == f(xi * a) - f(xi) * phi(a), "κ'_{2;1} formula fails")
        _require(cu.cumulant_a_prime(space, 2, [a, xi]) == f(a * xi) - phi(a) * f(xi), "κ'_{2;2} formula fails")
        k32 = (f(a * xi * a2) - phi(a) * f(xi * a2) - f(xi) * phi(a * a2) - f(a * xi) * phi(a2)
               + 2 * phi(a) * f(xi) * phi(a2))
        _require(cu.cumulant_a_prime(space, 2, [a, xi, a2]) == k32, "κ'_{3;2} formula fails")
    return {"diag_cumulants": [str(cu.cumulant_a(MatrixSpaceA(2), [MatrixSpaceA(2).diag([1, -1])] * k))
                               for k in range(1, 5)]}


def _args_with_vector(rng, n, m):
    return [(_random_vector(rng) if i == m else _random_algebra(rng)) for i in range(n)]


def check_moment_cumulant(n: int = 5, order: int = 6, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    moments = [_frac(rng) for _ in range(order)]
    kap = cu.cumulants_from_moments_a(moments)
    _require(cu.moments_from_cumulants_a(kap) == moments, "single-variable round trip fails")
    kap = [_frac(rng) for _ in range(order)]
    _require(cu.cumulants_from_moments_a(cu.moments_from_cumulants_a(kap)) == kap, "inverse round trip fails")
    space = _random_space(rng, bound=n)
    for k in range(1, n + 1):
        for m in [None] + list(range(k)):
            xs = _args_with_vector(rng, k, m) if m is not None else [_random_algebra(rng) for _ in range(k)]
            total = sum((cu.cumulant_partition(space, p, xs) for p in enumerate_nca(k)), Fraction(0))
            prod = xs[0]
            for x in xs[1:]:
                prod = prod * x
            target = space.f(prod) if m is not None else space.phi(prod)
            _require(total == target, f"moment-cumulant formula fails for n={k}, vector slot {m}")
        pairs = [(_random_algebra(rng), _random_vector(rng)) for _ in range(k)]
        total = DualScalar(0, 0)
        for p in enumerate_nca(k):
            term = DualScalar(1, 0)
            for b in p.blocks:
                term = term * cu.cumulant_b(space, [pairs[i - 1] for i in b])
            total = total + term
        _require(total == cu.expectation_b(space, cu.linking_product(space, pairs)), f"type-B formula fails at n={k}")
    return {}


def check_theorem_6_4(n: int = 5, samples: int = 3, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        space = _random_space(rng, bound=n)
        for k in range(1, n + 1):
            pairs = [(_random_algebra(rng), _random_vector(rng) if rng.random() < 0.8 else Poly()) for _ in range(k)]
            r = cu.cumulant_b(space, pairs)
            c = cu.cumulant_b(space, pairs, method="componentwise")
            _require(r == c, f"recursion {r} != componentwise {c} at n={k}")
    return {}


def check_recurrence_6_14(n: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    space = _random_space(rng, bound=n)
    for k in range(2, n + 1):
        for m in [None] + list(range(k)):
            xs = _args_with_vector(rng, k, m) if m is not None else [_random_algebra(rng) for _ in range(k)]
            for r in range(1, k):
                merged = xs[: r - 1] + [xs[r - 1] * xs[r]] + xs[r + 1:]
                lhs = cu.cumulant_unified(space, merged)
                rhs = cu.cumulant_unified(space, xs)
                for p in enumerate_nca(k):
                    if p.blno() == 2 and p.block_of(r) != p.block_of(r + 1):
                        rhs += cu.cumulant_partition(space, p, xs)
                _require(lhs == rhs, f"recurrence fails at n={k}, r={r}, vector slot {m}")
    return {}


def check_scalar_vanishing(n: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    space = _random_space(rng, bound=n)
    for k in range(2, n + 1):
        for m in [None] + list(range(k)):
            for r in range(k):
                if r == m:
                    continue
                xs = _args_with_vector(rng, k, m) if m is not None else [_random_algebra(rng) for _ in range(k)]
                xs[r] = Poly.scalar(_frac(rng))
                val = cu.cumulant_unified(space, xs)
                _require(val == 0, f"cumulant with scalar in slot {r + 1} is {val} (n={k}, vector slot {m})")
    return {}


def check_multilinearity(n: int = 4, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    space = _random_space(rng, bound=n)
    for k in range(1, n + 1):
        for m in [None] + list(range(k)):
            xs = _args_with_vector(rng, k, m) if m is not None else [_random_algebra(rng) for _ in range(k)]
            for slot in range(k):
                u = _random_vector(rng) if slot == m else _random_algebra(rng)
                s, t = _frac(rng), _frac(rng)
                mix = xs[:slot] + [xs[slot] * s + u * t] + xs[slot + 1:]
                lhs = cu.cumulant_unified(space, mix)
                rhs = s * cu.cumulant_unified(space, xs) + t * cu.cumulant_unified(space, xs[:slot] + [u] + xs[slot + 1:])
                _require(lhs == rhs, f"not linear in slot {slot + 1} (n={k})")
    return {}


def _r_componentwise(space, pair, N) -> SeriesB:
    return SeriesB([cu.cumulant_b(space, [pair] * k, method="componentwise") for k in range(1, N + 1)])


def check_prop_6_5(order: int = 6, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    zeta = series.zeta_b(order)
    space = _random_space(rng, bound=order)
    a, b, x = Poly.letter("a"), Poly.letter("b"), Poly.letter("x")
    elements = [("(a,x)", space, LinkingElement(a, x)),
                ("(a-b/2, 3x)", space, LinkingElement(a - b * Fraction(1, 2), x * 3)),
                ("(b,0)", space, LinkingElement(b, Poly()))]
    fp = fr.make_free_pair(_series_b(rng, order), _series_b(rng, order), order)
    for lab, el in fp.marked.items():
        elements.append((f"marked {lab}", fp.space, el))
    for name, sp, el in elements:
        M = cu.moment_series_b(sp, el, order)
        R = _r_componentwise(sp, el, order)
        _require(R == cu.r_transform_b(sp, el, order), f"R-transform paths disagree for {name}")
        _require(M == boxconv_b(R, zeta), f"M != R ⊠ ζ' for {name}")
        _require(M.prime() == boxconv_a(R.prime(), series.SeriesA([1] * order)), f"type-A projection fails for {name}")
    return {"elements": len(elements)}


def check_remark_6_5(seed: int = 0, samples: int = 5, **_) -> dict:
    rng = random.Random(seed)
    for _ in range(samples):
        space = _random_space(rng, bound=2)
        a, xi = _random_algebra(rng), _random_vector(rng)
        lhs = space.f(a * xi + xi * a)
        terms = (cu.cumulant_a_prime(space, 1, [xi, a]) + cu.cumulant_a_prime(space, 2, [a, xi])
                 + cu.cumulant_a_prime(space, 1, [xi]) * cu.cumulant_a(space, [a])
                 + cu.cumulant_a(space, [a]) * cu.cumulant_a_prime(space, 1, [xi]))
        _require(lhs == terms, "order-2 expansion fails")
        M = cu.moment_series_b(space, (a, xi), 2)
        R = cu.r_transform_b(space, (a, xi), 2)
        _require(boxconv_b(R, series.zeta_b(2))[2].double_prime == lhs == M[2].double_prime,
                 "second component of (R ⊠ ζ')_2 is not f(aξ + ξa)")
    return {}


# ---------------------------------------------------------------------------
# freeness


def check_freeness(order: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    fp = fr.make_free_pair(_series_b(rng, order), _series_b(rng, order), order)
    c = fr.mixed_cumulant_check(fp.space, fp.labels, order)
    _require(c.passed, f"mixed cumulant check fails: {c.witness}")
    m = fr.free_independence_moment_check(fp.space, fp.labels, order)
    _require(m.passed, f"moment check fails: {m.witness}")
    for lab, el in fp.marked.items():
        _require(cu.r_transform_b(fp.space, el, order) == fp.prescriptions[lab], f"pair {lab} misses its R-transform")
    # type A only: V = 0
    fa = fr.make_free_pair(SeriesB([(q, 0) for q in (_frac(rng) for _ in range(order))]),
                           SeriesB([(q, 0) for q in (_frac(rng) for _ in range(order))]), order, vectors=False)
    _require(fr.mixed_cumulant_check(fa.space, fa.labels, order).passed, "type-A free pair has mixed cumulants")
    _require(fr.free_independence_moment_check(fa.space, fa.labels, order).passed, "type-A free pair fails moments")
    bad = fa.space.perturbed("a1 a2", 1)
    _require(not fr.mixed_cumulant_check(bad, fa.labels, order).passed, "perturbed type-A pair passes cumulants")
    _require(not fr.free_independence_moment_check(bad, fa.labels, order).passed, "perturbed type-A pair passes moments")
    return {"cumulant_checks": c.checked, "moment_checks": m.checked}


_PERTURBATIONS = ["a1 x2", "x1 a2", "a1 a2", "a2 x1 a2", "a1 x2 a1", "a1 a2 a1 a2", "x2 a1 a1"]


def check_corollary_7_2(order: int = 4, samples: int = 10, negatives: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    verdicts = []
    for i in range(samples + negatives):
        fp = fr.make_free_pair(_series_b(rng, order), _series_b(rng, order), order)
        space = fp.space
        if i >= samples:
            word = _PERTURBATIONS[(i - samples) % len(_PERTURBATIONS)]
            space = space.perturbed(word, _frac(rng, nonzero=True))
        c = fr.mixed_cumulant_check(space, fp.labels, order)
        m = fr.free_independence_moment_check(space, fp.labels, order)
        expected = i < samples
        _require(c.passed == m.passed == expected,
                 f"instance {i}: cumulants {c.passed} ({c.witness}), moments {m.passed} ({m.witness})")
        verdicts.append(c.passed)
    return {"positive": verdicts.count(True), "negative": verdicts.count(False)}


def check_theorem_7_3(order: int = 5, seed: int = 0, **_) -> dict:
    rng = random.Random(seed)
    R1, R2 = _series_b(rng, order), _series_b(rng, order)
    fp = fr.make_free_pair(R1, R2, order)
    cert = fr.mixed_cumulant_check(fp.space, fp.labels, order)
    _require(cert.passed, f"not free: {cert.witness}")
    p1, p2 = fp.marked["1"], fp.marked["2"]
    r_sum, r_prod = fr.r_sum_product(fp.space, p1, p2, order, cert)
    _require(r_sum == R1 + R2, "R of the sum is not R_1 + R_2")
    _require(r_prod == boxconv_b(R1, R2), "R of the product is not R_1 ⊠ R_2")
    M = cu.moment_series_b(fp.space, cu.linking_product(fp.space, [p1, p2]), order)
    M2 = cu.moment_series_b(fp.space, p2, order)
    _require(M == boxconv_b(R1, M2), "M != R_1 ⊠ M_2")
    _require(r_prod.prime() == boxconv_a(R1.prime(), R2.prime()), "type-A projection of the product fails")
    return {}


PROPERTIES: dict[str, Callable[..., dict]] = {
    "cardinality-a": check_cardinality_a,
    "cardinality-b": check_cardinality_b,
    "abs-cover": check_abs_cover,
    "kreweras": check_kreweras,
    "iota": check_iota,
    "word-length": check_word_length,
    "covers": check_covers,
    "interval-factorization": check_interval_factorization,
    "bridge": check_bridge,
    "w2-control": check_w2_control,
    "theorem-5-3": check_theorem_5_3,
    "boxconv-b-algebra": check_boxconv_b_algebra,
    "eq-5-4": check_eq_5_4,
    "cumulant-formulas": check_cumulant_formulas,
    "moment-cumulant": check_moment_cumulant,
    "theorem-6-4": check_theorem_6_4,
    "recurrence-6-14": check_recurrence_6_14,
    "scalar-vanishing": check_scalar_vanishing,
    "multilinearity": check_multilinearity,
    "prop-6-5": check_prop_6_5,
    "remark-6-5": check_remark_6_5,
    "freeness": check_freeness,
    "corollary-7-2": check_corollary_7_2,
    "theorem-7-3": check_theorem_7_3,
}


def property_ids() -> list[str]:
    return sorted(PROPERTIES)


def run(prop: str, **params) -> VerificationReport:
    """Run one named check; parameters not accepted by the check are rejected."""
    if prop not in PROPERTIES:
        raise DomainError(f"unknown property {prop!r}; known: {', '.join(property_ids())}")
    fn = PROPERTIES[prop]
    accepted = set(inspect.signature(fn).parameters) - {"_"}
    params = {k: v for k, v in params.items() if v is not None}
    unknown = set(params) - accepted
    if unknown:
        raise DomainError(f"{prop} does not take {', '.join(sorted(unknown))}")
    start = time.perf_counter()
    try:
        details = fn(**params)
        verdict, cex = "pass", None
    except _Fail as exc:
        details, verdict, cex = {}, "fail", str(exc)
    return VerificationReport(prop, params, verdict, cex, time.perf_counter() - start, details or {})
