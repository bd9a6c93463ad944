"""Concrete non-commutative probability spaces of types A and B.

A type-A space provides ``unit``, ``scalar``, ``add``, ``mul`` and ``phi``.
A type-B space adds a bimodule: ``is_vector``, ``zero_vector`` and ``f``;
``mul`` then also implements the two-sided action ``a ξ b``.

Two models are supplied.  ``MatrixSpaceA`` holds k x k rational matrices with
the normalized trace.  ``FormalSpaceB`` is the free algebra on a set of
letters together with the free bimodule spanned by words containing exactly
one vector letter.  Its moments come from a table or are generated from
prescribed letter cumulants.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import numpy as np

from ..errors import DomainError, StructureError

__all__ = [
    "Poly",
    "LinkingElement",
    "MatrixSpaceA",
    "FormalSpaceB",
    "is_vector_letter",
    "load_space",
]


def is_vector_letter(letter: str) -> bool:
    """Vector generators are the letters whose name starts with ``x``."""
    return letter.startswith("x")


def _vec_count(word: tuple[str, ...]) -> int:
    return sum(1 for w in word if is_vector_letter(w))


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    """A finite linear combination of words; the empty word is the unit ``I``.

    Every word carries at most one vector letter, so a ``Poly`` is either an
    algebra element, a vector, or zero.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[str, ...], object] | None = None):
        clean: dict[tuple[str, ...], Fraction] = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            if _vec_count(word) > 1:
                raise DomainError(f"word {' '.join(word)!r} holds two vector letters")
            clean[word] = clean.get(word, Fraction(0)) + Fraction(c)
        self.terms = {w: c for w, c in clean.items() if c}
        self._hash = None

    @classmethod
    def letter(cls, name: str) -> "Poly":
        return cls({(name,): 1})

    @classmethod
    def scalar(cls, c) -> "Poly":
        return cls({(): c})

    @classmethod
    def word(cls, letters: Iterable[str], coeff=1) -> "Poly":
        return cls({tuple(letters): coeff})

    def is_vector(self) -> bool:
        return any(_vec_count(w) for w in self.terms)

    def is_algebra(self) -> bool:
        return not self.is_vector()

    def __add__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            terms: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    terms[w] = terms.get(w, Fraction(0)) + c1 * c2
            return Poly(terms)
        if isinstance(other, (int, Fraction)):
            return Poly({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = Poly.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            body = " ".join(w) if w else "I"
            parts.append(body if c == 1 else f"{_fmt(c)}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


@dataclass(frozen=True)
class LinkingElement:
    """An element ``(a, ξ)`` of the linking algebra ``A × V``."""

    a: object
    xi: object

    def __iter__(self):
        return iter((self.a, self.xi))


class MatrixSpaceA:
    """k x k rational matrices with the normalized trace ``φ(a) = tr(a)/k``."""

    def __init__(self, k: int):
        if k < 1:
            raise DomainError("matrix size must be positive")
        self.k = k

    def element(self, rows) -> np.ndarray:
        arr = np.array([[Fraction(x) for x in row] for row in rows], dtype=object)
        if arr.shape != (self.k, self.k):
            raise StructureError(f"expected a {self.k}x{self.k} matrix")
        return arr

    def diag(self, entries) -> np.ndarray:
        return self.element([[entries[i] if i == j else 0 for j in range(self.k)] for i in range(self.k)])

    def random(self, rng: random.Random, bound: int = 3) -> np.ndarray:
        return self.element([[Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
                              for _ in range(self.k)] for _ in range(self.k)])

    def unit(self) -> np.ndarray:
        return self.scalar(1)

    def scalar(self, c) -> np.ndarray:
        return self.diag([Fraction(c)] * self.k)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a.dot(b)

    def phi(self, a) -> Fraction:
        return sum((a[i, i] for i in range(self.k)), Fraction(0)) / self.k

    def is_vector(self, x) -> bool:
        return False


class FormalSpaceB:
    """The free type-B space on algebra letters and vector letters.

    ``φ`` and ``f`` are linear; on words they are given by ``word_moment``.
    Words longer than ``degree_bound`` cannot be evaluated.
    """

    def __init__(
        self,
        algebra_letters: Iterable[str],
        vector_letters: Iterable[str],
        degree_bound: int,
        *,
        table: Mapping[tuple[str, ...], Fraction] | None = None,
        letter_cumulant: Callable[[tuple[str, ...]], Fraction] | None = None,
        classes: Mapping[str, object] | None = None,
        default_zero: bool = False,
        perturbation: Mapping[tuple[str, ...], Fraction] | None = None,
    ):
        self.algebra_letters = tuple(algebra_letters)
        self.vector_letters = tuple(vector_letters)
        for a in self.algebra_letters:
            if is_vector_letter(a):
                raise StructureError(f"algebra letter {a!r} must not start with 'x'")
        for x in self.vector_letters:
            if not is_vector_letter(x):
                raise StructureError(f"vector letter {x!r} must start with 'x'")
        if (table is None) == (letter_cumulant is None):
            raise DomainError("give exactly one of a moment table or letter cumulants")
        self.degree_bound = degree_bound
        self._table = dict(table) if table is not None else None
        self._letter_cumulant = letter_cumulant
        self._classes = dict(classes) if classes else None
        self._default_zero = default_zero
        self._perturbation = {tuple(w): Fraction(v) for w, v in (perturbation or {}).items()}
        self._generated: dict[tuple[str, ...], Fraction] = {(): Fraction(1)}

    # constructors ---------------------------------------------------------

    @classmethod
    def from_table(cls, algebra_letters, vector_letters, degree_bound, table, default_zero=False):
        table = {tuple(w): Fraction(v) for w, v in table.items()}
        return cls(algebra_letters, vector_letters, degree_bound, table=table, default_zero=default_zero)

    @classmethod
    def random(cls, algebra_letters, vector_letters, degree_bound, rng: random.Random, bound: int = 4):
        """Independent random rational moments for every word up to ``degree_bound``."""
        algebra_letters, vector_letters = tuple(algebra_letters), tuple(vector_letters)
        table = {}
        for word in _words(algebra_letters, vector_letters, degree_bound):
            if word:
                table[word] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return cls(algebra_letters, vector_letters, degree_bound, table=table)

    @classmethod
    def from_cumulants(cls, algebra_letters, vector_letters, degree_bound, letter_cumulant, classes=None):
        """Moments generated by summing letter cumulants over non-crossing partitions.

        ``letter_cumulant(word)`` is κ^(A) of the letters of ``word`` (no vector
        letter) or κ^(A') (one vector letter).  With ``classes`` given, cumulants
        of letters from different classes are taken to be zero.
        """
        return cls(algebra_letters, vector_letters, degree_bound,
                   letter_cumulant=letter_cumulant, classes=classes)

    def perturbed(self, word: Iterable[str] | str, delta) -> "FormalSpaceB":
        """A copy whose moment of ``word`` is shifted by ``delta`` (other words unchanged)."""
        word = tuple(word.split()) if isinstance(word, str) else tuple(word)
        self._check_word(word)
        pert = dict(self._perturbation)
        pert[word] = pert.get(word, Fraction(0)) + Fraction(delta)
        out = FormalSpaceB(self.algebra_letters, self.vector_letters, self.degree_bound,
                           table=self._table, letter_cumulant=self._letter_cumulant,
                           classes=self._classes, default_zero=self._default_zero, perturbation=pert)
        out._generated = self._generated
        return out

    # elements ------------------------------------------------------------

    def letter(self, name: str) -> Poly:
        if name not in self.algebra_letters and name not in self.vector_letters:
            raise StructureError(f"unknown generator {name!r}")
        return Poly.letter(name)

    def unit(self) -> Poly:
        return Poly.scalar(1)

    def scalar(self, c) -> Poly:
        return Poly.scalar(c)

    def zero_vector(self) -> Poly:
        return Poly()

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def is_vector(self, x: Poly) -> bool:
        return x.is_vector()

    # expectations ----------------------------------------------------------

    def _check_word(self, word: tuple[str, ...]) -> None:
        if len(word) > self.degree_bound:
            raise DomainError(f"word of length {len(word)} exceeds the degree bound {self.degree_bound}")
        for w in word:
            if w not in self.algebra_letters and w not in self.vector_letters:
                raise StructureError(f"unknown generator {w!r}")

    def word_moment(self, word: Iterable[str]) -> Fraction:
        """φ(word) for an algebra word, f(word) for a vector word."""
        word = tuple(word)
        self._check_word(word)
        base = self._base_moment(word)
        return base + self._perturbation.get(word, Fraction(0))

    def _base_moment(self, word: tuple[str, ...]) -> Fraction:
        if not word:
            return Fraction(1)
        if self._table is not None:
            if word in self._table:
                return self._table[word]
            if self._default_zero:
                return Fraction(0)
            raise DomainError(f"no moment recorded for {' '.join(word)!r}")
        return self._generate(word)

    def _generate(self, word: tuple[str, ...]) -> Fraction:
        # sum over the block V containing the first letter; the gaps between
        # consecutive elements of V are independent non-crossing problems
        if word in self._generated:
            return self._generated[word]
        n = len(word)
        if self._classes is not None:
            c0 = self._classes.get(word[0])
            rest = [i for i in range(1, n) if self._classes.get(word[i]) == c0]
        else:
            rest = list(range(1, n))
        total = Fraction(0)
        for r in range(len(rest) + 1):
            for chosen in itertools.combinations(rest, r):
                block = (0,) + chosen
                k = self._letter_cumulant(tuple(word[i] for i in block))
                if not k:
                    continue
                term = Fraction(k)
                bounds = block + (n,)
                for lo, hi in zip(bounds, bounds[1:]):
                    if hi - lo > 1:
                        term *= self._generate(word[lo + 1:hi])
                        if not term:
                            break
                total += term
        self._generated[word] = total
        return total

    def _evaluate(self, x: Poly, want_vector: bool) -> Fraction:
        if not isinstance(x, Poly):
            raise DomainError(f"not an element of this space: {x!r}")
        total = Fraction(0)
        for w, c in x.terms.items():
            if bool(_vec_count(w)) != want_vector:
                kind = "vector" if want_vector else "algebra element"
                raise DomainError(f"expected a {kind}, got {x}")
            total += c * self.word_moment(w)
        return total

    def phi(self, a: Poly) -> Fraction:
        return self._evaluate(a, False)

    def f(self, xi: Poly) -> Fraction:
        return self._evaluate(xi, True)


def _words(algebra_letters, vector_letters, bound):
    for length in range(bound + 1):
        for word in itertools.product(algebra_letters + vector_letters, repeat=length):
            if _vec_count(word) <= 1:
                yield word


def load_space(data) -> tuple[FormalSpaceB, dict[str, LinkingElement]]:
    """Build a space from its JSON description.

    Two shapes are accepted::

        {"algebra": ["a1"], "vector": ["x"], "degree_bound": 3,
         "moments": [{"word": "a1 x a1", "value": "3/2"}, ...], "default_zero": false}

        {"order": 4, "pairs": [{"pair": "g1", "R": [[1,1],[0,0]]}, ...]}

    The second builds freely independent pairs; pair ``g1`` gets the letters
    ``ag1`` and ``xg1``.  Returns the space and its marked linking elements.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if "pairs" in data:
        from ..series import SeriesB
        from .freeness import make_free_pairs

        prescriptions = {p["pair"]: SeriesB(p["R"]) for p in data["pairs"]}
        order = int(data.get("order", max(s.order for s in prescriptions.values())))
        fp = make_free_pairs(prescriptions, order)
        return fp.space, fp.marked
    try:
        alg = list(data["algebra"])
        vec = list(data.get("vector", []))
        bound = int(data["degree_bound"])
        table = {tuple(e["word"].split()): Fraction(str(e["value"])) for e in data["moments"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"malformed space description: {exc}") from exc
    space = FormalSpaceB.from_table(alg, vec, bound, table, default_zero=bool(data.get("default_zero", False)))
    marked = {}
    for a in alg:
        marked[a] = LinkingElement(Poly.letter(a), Poly())
    for x in vec:
        marked[x] = LinkingElement(Poly.scalar(0), Poly.letter(x))
    return space, marked
