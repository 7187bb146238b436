"""Scalar generalized Verma modules M(rho) = U(g) (x)_{U(p)} K w.

Basis vectors X^P (x) w are indexed by exponent tuples P over the
complement generators of p (see :func:`complement_roots`).  A generator
acts by straightening ``x * X^P`` in the algebra ordered (complement, p),
then evaluating each U(p) tail through the character: Cartan letters give
their lambda value, any other letter of p kills the term.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .errors import InvalidInputError, TruncationError
from .pbw import EnvelopingAlgebra, UEAElement, _compositions, _normalize, filtration_degree
from .rootdata import (Gen, ParabolicCharacter, Weight, as_rational, build_root_datum,
                       delta_weight, format_rational, gen_name, root_order, weight_of_monomial)


class GeneralizedVerma:
    """Action engine for M(rho); one shared instance per character."""

    _registry: dict = {}

    def __init__(self, pc: ParabolicCharacter):
        self.pc = pc
        self.algebra = EnvelopingAlgebra.for_character(pc)
        self.m = pc.m
        lam = pc.lam.coords
        tail = []
        for g in self.algebra.order[self.m:]:
            i, j = g
            tail.append(lam[i - 1] if i == j else None)
        self._tail_values = tail
        self._memo: dict = {}

    @classmethod
    def of(cls, pc: ParabolicCharacter) -> "GeneralizedVerma":
        eng = cls._registry.get(pc)
        if eng is None:
            eng = cls._registry.setdefault(pc, cls(pc))
        return eng

    def _tail_value(self, M: tuple):
        val = 1
        for v, e in zip(self._tail_values, M[self.m:]):
            if e:
                if not v:
                    return 0
                val = val * v ** e
        return val

    def act_gen(self, g: Gen, P: tuple) -> tuple:
        """x_g . (X^P (x) w) as ((Q, coeff), ...)."""
        key = (g, P)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        alg = self.algebra
        k = alg._gen_index(g)
        M = tuple(P) + (0,) * (alg.dim - self.m)
        acc: dict = {}
        for N, c in alg._left(k, M):
            v = self._tail_value(N)
            if v:
                Q = N[:self.m]
                acc[Q] = acc.get(Q, 0) + c * v
        res = tuple((Q, _normalize(c)) for Q, c in acc.items() if c)
        return self._memo.setdefault(key, res)

    def act_gen_terms(self, g: Gen, terms: Mapping) -> dict:
        acc: dict = {}
        for P, c in terms.items():
            for Q, v in self.act_gen(g, P):
                acc[Q] = acc.get(Q, 0) + c * v
        return {Q: _normalize(c) for Q, c in acc.items() if c}

    def act_word(self, word: Iterable[Gen], terms: Mapping) -> dict:
        """Apply w_1 w_2 ... w_r (rightmost letter first)."""
        out = dict(terms)
        for g in reversed(list(word)):
            if not out:
                break
            out = self.act_gen_terms(g, out)
        return out


class ModuleVector:
    """Element of M(rho): map from exponent tuples P to exact rationals."""

    __slots__ = ("pc", "terms")

    def __init__(self, pc: ParabolicCharacter, terms: Mapping | None = None):
        self.pc = pc
        clean = {}
        for P, c in (terms or {}).items():
            P = tuple(int(p) for p in P)
            if len(P) != pc.m or any(p < 0 for p in P):
                raise InvalidInputError(f"bad basis index {P} for a module with m={pc.m}")
            c = as_rational(c)
            if c:
                clean[P] = c
        self.terms = clean

    @classmethod
    def basis_vector(cls, pc: ParabolicCharacter, P) -> "ModuleVector":
        return cls(pc, {tuple(P): 1})

    @classmethod
    def generator(cls, pc: ParabolicCharacter) -> "ModuleVector":
        return cls(pc, {(0,) * pc.m: 1})

    def _check(self, other):
        if not isinstance(other, ModuleVector) or other.pc != self.pc:
            raise InvalidInputError("vectors of different modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for P, c in other.terms.items():
            out[P] = out.get(P, 0) + c
        return ModuleVector(self.pc, out)

    def __neg__(self):
        return ModuleVector(self.pc, {P: -c for P, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        k = as_rational(k)
        return ModuleVector(self.pc, {P: k * c for P, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.pc == other.pc and self.terms == other.terms

    def __hash__(self):
        return hash((self.pc, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        return max((sum(P) for P in self.terms), default=None)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for P in sorted(self.terms, key=lambda P: (sum(P), tuple(-p for p in P))):
            mono = "*".join(gen_name(g) + (f"^{p}" if p > 1 else "")
                            for g, p in zip(self.pc.complement, P) if p) or "1"
            parts.append(f"{format_rational(self.terms[P])}*{mono}(x)w")
        return " + ".join(parts)


def act(a: UEAElement, v: ModuleVector) -> ModuleVector:
    """Exact action of U(sl_n) on M(rho); a may come from any ordered algebra."""
    if a.n != v.pc.n:
        raise InvalidInputError("element and module live in different sl_n")
    eng = GeneralizedVerma.of(v.pc)
    order = a.algebra.order
    acc: dict = {}
    for M, c in a.terms.items():
        word = [order[k] for k in a.algebra.word_of(M)]
        for P, val in eng.act_word(word, v.terms).items():
            acc[P] = acc.get(P, 0) + c * val
    return ModuleVector(v.pc, acc)


def module_basis(m: int, l: int) -> list[tuple]:
    """Exponent tuples of length m and degree <= l: by degree, then descending."""
    out = []
    for d in range(l + 1):
        out.extend(_compositions(d, m))
    return out


class TruncatedModule:
    """M_l(rho), spanned by X^P (x) w with |P| <= l."""

    def __init__(self, pc: ParabolicCharacter, level: int):
        if level < 0:
            raise InvalidInputError("level must be >= 0")
        self.pc = pc
        self.level = level
        self.basis = module_basis(pc.m, level)
        self.index = {P: k for k, P in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def weight(self, P) -> Weight:
        return self.pc.lam + weight_of_monomial(P, self.pc)

    def vector(self, P) -> ModuleVector:
        P = tuple(P)
        if P not in self.index:
            raise InvalidInputError(f"{P} is not a basis index of M_{self.level}")
        return ModuleVector.basis_vector(self.pc, P)

    def generator(self) -> ModuleVector:
        return ModuleVector.generator(self.pc)

    def coordinates(self, v: ModuleVector) -> dict[int, object]:
        try:
            return {self.index[P]: c for P, c in v.terms.items()}
        except KeyError:
            raise TruncationError("vector is not supported inside this truncation") from None

    def act(self, a: UEAElement, v: ModuleVector) -> ModuleVector:
        """Action that refuses to leave M_l: fil(a) + deg(v) must be <= level."""
        if v.pc != self.pc:
            raise InvalidInputError("vector belongs to another module")
        fa = filtration_degree(a)
        dv = v.degree()
        if fa is not None and dv is not None and fa + dv > self.level:
            raise TruncationError(
                f"U_{fa} acting on level-{dv} vectors can leave M_{self.level}")
        return act(a, v)

    def __repr__(self):
        return f"TruncatedModule({self.pc}, level={self.level}, dim={self.dimension})"


def build_module(pc: ParabolicCharacter, l: int) -> TruncatedModule:
    mod = TruncatedModule(pc, l)
    assert mod.dimension == comb(pc.m + l, l)
    return mod


def weight_spaces(pc: ParabolicCharacter, l: int) -> dict[Weight, list[int]]:
    mod = TruncatedModule(pc, l)
    out: dict[Weight, list[int]] = {}
    for k, P in enumerate(mod.basis):
        out.setdefault(mod.weight(P), []).append(k)
    return out


def classical_verma(mu: Weight, l: int, shift: str = "none") -> TruncatedModule:
    """Borel-induced Verma module with highest weight mu, or mu - delta."""
    if shift not in ("none", "minus-delta"):
        raise InvalidInputError(f"unknown shift {shift!r}")
    top = mu - delta_weight(mu.rank + 1) if shift == "minus-delta" else mu
    return build_module(ParabolicCharacter.from_weight(top), l)


def simple_root_coords(w: Weight) -> tuple:
    """Coefficients c with w = sum c_i alpha_i (Cartan matrix of type A solved exactly)."""
    r = w.rank
    # tridiagonal solve: 2c_t - c_{t-1} - c_{t+1} = w_t
    a = [Fraction(-1)] * r
    b = [Fraction(2)] * r
    cc = [Fraction(-1)] * r
    d = [Fraction(x) for x in w.coords]
    for t in range(1, r):
        f = a[t] / b[t - 1]
        b[t] -= f * cc[t - 1]
        d[t] -= f * d[t - 1]
    x = [Fraction(0)] * r
    for t in range(r - 1, -1, -1):
        x[t] = (d[t] - (cc[t] * x[t + 1] if t + 1 < r else 0)) / b[t]
    return tuple(_normalize(v) for v in x)


def _exponent_solutions(expansions: list[tuple], target: tuple) -> list[tuple]:
    """All non-negative P with sum_k P_k * expansions[k] == target."""
    out = []
    dim = len(target)

    def rec(k, remaining, acc):
        if k == len(expansions):
            if not any(remaining):
                out.append(tuple(acc))
            return
        vec = expansions[k]
        bound = min((remaining[t] // vec[t] for t in range(dim) if vec[t]), default=0)
        for p in range(bound, -1, -1):
            rec(k + 1, tuple(remaining[t] - p * vec[t] for t in range(dim)), acc + [p])

    rec(0, tuple(target), [])
    return out


@lru_cache(maxsize=None)
def weight_space_basis(pc: ParabolicCharacter, mu: Weight, level: int | None = None) -> tuple:
    """Exponent tuples P with lambda + alpha_P == mu (and |P| <= level).

    Ordered like :func:`module_basis`.  Raises InvalidInputError if mu is not
    lambda minus a non-negative integer combination of simple roots.
    """
    beta = simple_root_coords(pc.lam - mu)
    if any(not isinstance(c, int) or c < 0 for c in beta):
        raise InvalidInputError(f"{mu} is not of the form lambda + alpha_P")
    rd = build_root_datum(pc.n)
    expansions = [rd.simple_root_expansion((i, j)) for j, i in pc.complement]
    sols = _exponent_solutions(expansions, beta)
    if level is not None:
        sols = [P for P in sols if sum(P) <= level]
    sols.sort(key=lambda P: (sum(P), tuple(-p for p in P)))
    return tuple(sols)


def raising_words(n: int, beta: tuple) -> list[list[Gen]]:
    """PBW monomials of U(n+) of weight sum beta_i alpha_i, as words."""
    rd = build_root_datum(n)
    roots = list(rd.positive_roots)
    expansions = [rd.simple_root_expansion(r) for r in roots]
    words = []
    for E in _exponent_solutions(expansions, beta):
        word = []
        for r, e in zip(roots, E):
            word.extend([r] * e)
        words.append(word)
    return words


def _compatible_classical(pc: ParabolicCharacter, pct: ParabolicCharacter):
    if not pct.is_full_flag or pct.n != pc.n or pct.lam != pc.lam:
        raise InvalidInputError("source must be the full-flag character with the same lambda")


def project_from_classical(pc: ParabolicCharacter, v: ModuleVector) -> ModuleVector:
    """Surjection M(rho~) -> M(rho), X^Q (x) w~ -> X^Q (x) w."""
    _compatible_classical(pc, v.pc)
    eng = GeneralizedVerma.of(pc)
    gens = v.pc.complement
    acc: dict = {}
    gen0 = {(0,) * pc.m: 1}
    for Q, c in v.terms.items():
        word = [g for g, q in zip(gens, Q) for _ in range(q)]
        for P, val in eng.act_word(word, gen0).items():
            acc[P] = acc.get(P, 0) + c * val
    return ModuleVector(pc, acc)


def projection_kernel(pc: ParabolicCharacter, l: int):
    """Kernel of M_l(rho~) -> M_l(rho) as a subspace of M_l(rho~) coordinates."""
    from .exactla import kernel
    pct = ParabolicCharacter.from_weight(pc.lam)
    src = TruncatedModule(pct, l)
    dst = TruncatedModule(pc, l)
    rows = []
    for Q in src.basis:
        img = project_from_classical(pc, ModuleVector.basis_vector(pct, Q))
        rows.append(dst.coordinates(img))
    return kernel(rows, dst.dimension)
