"""Enveloping algebra U(sl_n) in PBW normal form.

An :class:`EnvelopingAlgebra` fixes an ordering of the Chevalley
generators; monomials are exponent tuples over that ordering.  Products are
brought to normal form by rewriting the first out-of-order adjacent pair
with the bracket, ``y x = x y + [y, x]``.  Single-generator products
``g * M`` and ``M * g`` are memoized per algebra.  The memo only ever gains
entries whose values are fully determined by their keys, so concurrent
callers still see pure-function semantics.

Structure constants of the Chevalley basis are integers, so the kernel
runs on Python ints; elements accept arbitrary exact rationals.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from itertools import chain
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InvalidInputError
from .rootdata import (Gen, ParabolicCharacter, as_rational, build_root_datum, format_rational,
                       gen_name, gen_weight, generator_bracket)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class PBWMonomial(tuple):
    """Exponent vector over an algebra's generator order."""

    __slots__ = ()

    @property
    def exps(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class EnvelopingAlgebra:
    _registry: dict = {}

    def __init__(self, n: int, order: Sequence[Gen]):
        rd = build_root_datum(n)
        order = tuple(tuple(g) for g in order)
        if sorted(order) != sorted(rd.generator_order):
            raise InvalidInputError("order must be a permutation of the sl_n generators")
        self.n = n
        self.order = order
        self.dim = len(order)
        self.index = {g: k for k, g in enumerate(order)}
        self._bracket = [[tuple((self.index[h], c) for h, c in generator_bracket(n, g, h2))
                          for h2 in order] for g in order]
        self._left_memo: dict = {}
        self._right_memo: dict = {}
        self._weights = [gen_weight(n, g) for g in order]

    @classmethod
    def get(cls, n: int, order: Sequence[Gen] | None = None) -> "EnvelopingAlgebra":
        if order is None:
            order = build_root_datum(n).generator_order
        key = (n, tuple(order))
        alg = cls._registry.get(key)
        if alg is None:
            alg = cls._registry.setdefault(key, cls(n, order))
        return alg

    @classmethod
    def for_character(cls, pc: ParabolicCharacter) -> "EnvelopingAlgebra":
        """Algebra ordered as (complement of p, then p): normal forms are X^P * U(p)."""
        return cls.get(pc.n, pc.generator_order)

    def __repr__(self):
        return f"EnvelopingAlgebra(sl_{self.n}, order={[gen_name(g) for g in self.order]})"

    # ---- kernel -----------------------------------------------------------

    def _left(self, g: int, M: tuple) -> tuple:
        """Normal form of x_g * M as ((monomial, int), ...)."""
        key = (g, M)
        hit = self._left_memo.get(key)
        if hit is not None:
            return hit
        a = next((k for k, e in enumerate(M) if e), None)
        if a is None or g <= a:
            N = list(M)
            N[g] += 1
            res = ((tuple(N), 1),)
        else:
            Mp = list(M)
            Mp[a] -= 1
            Mp = tuple(Mp)
            acc: dict = {}
            for t, c in self._left(g, Mp):
                for t2, c2 in self._left(a, t):
                    acc[t2] = acc.get(t2, 0) + c * c2
            for h, ch in self._bracket[g][a]:
                for t, c in self._left(h, Mp):
                    acc[t] = acc.get(t, 0) + ch * c
            res = tuple((k, v) for k, v in acc.items() if v)
        return self._left_memo.setdefault(key, res)

    def _right(self, M: tuple, g: int) -> tuple:
        """Normal form of M * x_g."""
        key = (M, g)
        hit = self._right_memo.get(key)
        if hit is not None:
            return hit
        b = next((k for k in range(len(M) - 1, -1, -1) if M[k]), None)
        if b is None or g >= b:
            N = list(M)
            N[g] += 1
            res = ((tuple(N), 1),)
        else:
            Mp = list(M)
            Mp[b] -= 1
            Mp = tuple(Mp)
            acc: dict = {}
            for t, c in self._right(Mp, g):
                for t2, c2 in self._right(t, b):
                    acc[t2] = acc.get(t2, 0) + c * c2
            for h, ch in self._bracket[b][g]:
                for t, c in self._right(Mp, h):
                    acc[t] = acc.get(t, 0) + ch * c
            res = tuple((k, v) for k, v in acc.items() if v)
        return self._right_memo.setdefault(key, res)

    def memo_size(self) -> int:
        return len(self._left_memo) + len(self._right_memo)

    # ---- element constructors --------------------------------------------

    def _gen_index(self, g) -> int:
        try:
            return self.index[tuple(g)]
        except (KeyError, TypeError):
            raise InvalidInputError(f"unknown generator {g!r} for sl_{self.n}") from None

    def unit_monomial(self) -> PBWMonomial:
        return PBWMonomial((0,) * self.dim)

    def monomial(self, exps: Mapping[Gen, int] | Sequence[int]) -> PBWMonomial:
        if isinstance(exps, Mapping):
            out = [0] * self.dim
            for g, e in exps.items():
                out[self._gen_index(g)] += e
            return PBWMonomial(out)
        if len(exps) != self.dim:
            raise InvalidInputError("exponent vector of wrong length")
        return PBWMonomial(exps)

    def one(self) -> "UEAElement":
        return UEAElement(self, {self.unit_monomial(): 1})

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def gen(self, g: Gen, coeff=1) -> "UEAElement":
        e = [0] * self.dim
        e[self._gen_index(g)] = 1
        return UEAElement(self, {tuple(e): coeff})

    def scalar(self, c) -> "UEAElement":
        return self.one() * c

    def from_chevalley(self, x) -> "UEAElement":
        if x.n != self.n:
            raise InvalidInputError("Chevalley element from a different sl_n")
        return UEAElement(self, {self._unit_plus(self._gen_index(g)): c for g, c in x.terms.items()})

    def _unit_plus(self, k: int) -> tuple:
        e = [0] * self.dim
        e[k] = 1
        return tuple(e)

    def word_of(self, M: Sequence[int]) -> list[int]:
        """Generator indices of a normal monomial, left to right."""
        return list(chain.from_iterable([k] * e for k, e in enumerate(M)))

    def monomial_weight(self, M: Sequence[int]):
        from .rootdata import Weight
        coords = [0] * (self.n - 1)
        for k, e in enumerate(M):
            if e:
                w = self._weights[k].coords
                for t in range(self.n - 1):
                    coords[t] += e * w[t]
        return Weight(tuple(coords))

    def monomial_name(self, M: Sequence[int]) -> str:
        parts = []
        for k, e in enumerate(M):
            if e:
                name = gen_name(self.order[k])
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    # ---- products -----------------------------------------------------------

    def left_mul_gen(self, k: int, terms: Mapping) -> dict:
        acc: dict = {}
        for M, c in terms.items():
            for N, c2 in self._left(k, M):
                acc[N] = acc.get(N, 0) + c * c2
        return {N: _normalize(c) for N, c in acc.items() if c}

    def right_mul_gen(self, terms: Mapping, k: int) -> dict:
        acc: dict = {}
        for M, c in terms.items():
            for N, c2 in self._right(M, k):
                acc[N] = acc.get(N, 0) + c * c2
        return {N: _normalize(c) for N, c in acc.items() if c}

    def mul_monomial_terms(self, M: Sequence[int], terms: Mapping) -> dict:
        out = dict(terms)
        for k in reversed(self.word_of(M)):
            out = self.left_mul_gen(k, out)
        return out


class UEAElement:
    """Element of U(sl_n): finite map from normal monomials to exact rationals."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Mapping | None = None):
        self.algebra = algebra
        clean = {}
        for M, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[tuple(M)] = c
        self.terms = clean

    @property
    def n(self) -> int:
        return self.algebra.n

    def _coerce(self, other) -> "UEAElement":
        if isinstance(other, UEAElement):
            if other.algebra is not self.algebra:
                raise InvalidInputError("elements belong to differently ordered algebras")
            return other
        return self.algebra.scalar(as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for M, c in other.terms.items():
            out[M] = out.get(M, 0) + c
        return UEAElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.algebra, {M: -c for M, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return multiply(self, other)
        c = as_rational(other)
        return UEAElement(self.algebra, {M: c * v for M, v in self.terms.items()})

    def __rmul__(self, other):
        c = as_rational(other)
        return UEAElement(self.algebra, {M: c * v for M, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.algebra is other.algebra and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for M in sorted(self.terms, key=lambda M: (-sum(M), tuple(-e for e in M))):
            parts.append(f"{format_rational(self.terms[M])}*{self.algebra.monomial_name(M)}")
        return " + ".join(parts)


def multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    if not (isinstance(a, UEAElement) and isinstance(b, UEAElement)):
        raise InvalidInputError("multiply expects two UEAElements")
    if a.algebra is not b.algebra:
        raise InvalidInputError("elements belong to differently ordered algebras")
    alg = a.algebra
    acc: dict = {}
    for M, c in a.terms.items():
        for N, v in alg.mul_monomial_terms(M, b.terms).items():
            acc[N] = acc.get(N, 0) + c * v
    return UEAElement(alg, acc)


def straighten(word: Iterable[Gen], coefficient=1, algebra: EnvelopingAlgebra | None = None,
               n: int | None = None) -> UEAElement:
    """Normal form of ``coefficient * w_1 w_2 ... w_r``."""
    word = [tuple(g) for g in word]
    if algebra is None:
        if n is None:
            if not word:
                raise InvalidInputError("pass n or an algebra for the empty word")
            # smallest sl_n containing every letter; H_t needs n >= t + 1
            n = max(max(i, j) + (i == j) for i, j in word)
        algebra = EnvelopingAlgebra.get(n)
    idx = [algebra._gen_index(g) for g in word]
    terms = {algebra.unit_monomial(): as_rational(coefficient)}
    for k in reversed(idx):
        terms = algebra.left_mul_gen(k, terms)
    return UEAElement(algebra, terms)


def filtration_degree(a: UEAElement) -> int | None:
    """Smallest l with a in U_l; None for the zero element."""
    if not a.terms:
        return None
    return max(sum(M) for M in a.terms)


def _compositions(total: int, parts: int):
    """Compositions of ``total`` into ``parts`` parts, lexicographically descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def selected_generators(algebra: EnvelopingAlgebra, selector: str = "all",
                        pc: ParabolicCharacter | None = None) -> list[int]:
    if selector == "all":
        return list(range(algebra.dim))
    if pc is None:
        raise InvalidInputError(f"selector {selector!r} needs a parabolic character")
    if pc.n != algebra.n:
        raise InvalidInputError("character and algebra live in different sl_n")
    if selector == "negative":
        gens = pc.complement
    elif selector == "parabolic":
        gens = pc.parabolic_basis
    else:
        raise InvalidInputError(f"unknown selector {selector!r}")
    return sorted(algebra.index[g] for g in gens)


def enumerate_pbw(algebra: EnvelopingAlgebra, l: int, selector: str = "all",
                  pc: ParabolicCharacter | None = None) -> list[PBWMonomial]:
    """PBW monomials of degree <= l on the selected generators.

    Ordered by degree, then by exponent vector in descending lexicographic order.
    """
    if l < 0:
        raise InvalidInputError("level must be >= 0")
    support = selected_generators(algebra, selector, pc)
    out = []
    for d in range(l + 1):
        for comp in _compositions(d, len(support)):
            e = [0] * algebra.dim
            for k, v in zip(support, comp):
                e[k] = v
            out.append(PBWMonomial(e))
    return out


def dim_truncated(num_generators: int, l: int) -> int:
    return comb(num_generators + l, l)


def generator_matrix(n: int, g: Gen) -> np.ndarray:
    i, j = g
    m = np.full((n, n), Fraction(0), dtype=object)
    if i == j:
        m[i - 1, i - 1] = Fraction(1)
        m[i, i] = Fraction(-1)
    else:
        m[i - 1, j - 1] = Fraction(1)
    return m


def fundamental_matrix(a: UEAElement) -> np.ndarray:
    """Image of a under U(sl_n) -> End(K^n) extending the defining representation."""
    alg = a.algebra
    n = alg.n
    mats = [generator_matrix(n, g) for g in alg.order]
    ident = np.identity(n, dtype=object) * Fraction(1)
    total = np.full((n, n), Fraction(0), dtype=object)
    for M, c in a.terms.items():
        prod = ident
        for k in alg.word_of(M):
            prod = prod.dot(mats[k])
        total = total + prod * Fraction(c)
    return total
