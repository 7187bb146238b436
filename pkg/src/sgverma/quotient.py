"""Maximal submodule K of M(rho), its truncations K_l, and L_l = M_l / K_l.

A vector m of weight mu lies in K exactly when no raising monomial of
weight lambda - mu carries m to a nonzero multiple of the generator.  The
contravariant form built from the transpose antiautomorphism gives a
second, independent description of the same subspace.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInputError, InvariantViolation
from .exactla import TruncatedSubspace, direct_sum, kernel
from .rootdata import ParabolicCharacter, Weight, build_root_datum
from .verma import (GeneralizedVerma, TruncatedModule, raising_words, simple_root_coords,
                    weight_space_basis, weight_spaces)


def _highest_coefficient(eng: GeneralizedVerma, word, P) -> object:
    return eng.act_word(word, {P: 1}).get((0,) * eng.m, 0)


@lru_cache(maxsize=None)
def submodule_membership_weightspace(pc: ParabolicCharacter, mu: Weight,
                                     level: int | None = None) -> TruncatedSubspace:
    """K intersected with M(rho)_mu (and with M_level when given).

    Coordinates follow :func:`weight_space_basis` ``(pc, mu, level)``.
    """
    basis = weight_space_basis(pc, mu, level)
    if mu == pc.lam:
        return TruncatedSubspace(len(basis), ())
    words = raising_words(pc.n, simple_root_coords(pc.lam - mu))
    eng = GeneralizedVerma.of(pc)
    rows = []
    for P in basis:
        row = {}
        for c, word in enumerate(words):
            v = _highest_coefficient(eng, word, P)
            if v:
                row[c] = v
        rows.append(row)
    return kernel(rows, len(words))


def _transpose_word(complement, Q) -> list:
    word = [g for g, q in zip(complement, Q) for _ in range(q)]
    return [(j, i) for i, j in reversed(word)]


@lru_cache(maxsize=None)
def shapovalov_radical_weightspace(pc: ParabolicCharacter, mu: Weight,
                                   level: int | None = None) -> TruncatedSubspace:
    """Radical of the contravariant form on M(rho)_mu, restricted like the raising test.

    Gram entry (P, Q) is the generator coefficient of sigma(X^Q) X^P w, where
    sigma(E_ij) = E_ji reverses products.  Rows run over the (truncated)
    weight-space basis, columns over the full weight space.
    """
    rows_basis = weight_space_basis(pc, mu, level)
    cols_basis = weight_space_basis(pc, mu, None)
    eng = GeneralizedVerma.of(pc)
    sigma_words = [_transpose_word(pc.complement, Q) for Q in cols_basis]
    rows = []
    for P in rows_basis:
        row = {}
        for c, word in enumerate(sigma_words):
            v = _highest_coefficient(eng, word, P)
            if v:
                row[c] = v
        rows.append(row)
    return kernel(rows, len(cols_basis))


_ORACLES = {
    "raising": submodule_membership_weightspace,
    "shapovalov": shapovalov_radical_weightspace,
}


@dataclass(frozen=True)
class QuotientTruncation:
    pc: ParabolicCharacter
    level: int
    K: TruncatedSubspace
    dim_M: int
    weight_dims: dict = field(compare=False)
    method: str = "raising"

    @property
    def dim_K(self) -> int:
        return self.K.rank

    @property
    def dim_L(self) -> int:
        return self.dim_M - self.K.rank


@lru_cache(maxsize=None)
def maximal_submodule_trunc(pc: ParabolicCharacter, l: int, method: str = "raising") -> QuotientTruncation:
    try:
        oracle = _ORACLES[method]
    except KeyError:
        raise InvalidInputError(f"unknown method {method!r}") from None
    mod = TruncatedModule(pc, l)
    parts = []
    weight_dims = {}
    for mu, idxs in weight_spaces(pc, l).items():
        if weight_space_basis(pc, mu, l) != tuple(mod.basis[i] for i in idxs):
            raise InvariantViolation(f"weight-space ordering mismatch at {mu}")
        K_mu = oracle(pc, mu, l)
        parts.append(K_mu.embed(mod.dimension, idxs))
        weight_dims[mu] = len(idxs) - K_mu.rank
    if weight_dims.get(pc.lam) != 1:
        raise InvariantViolation("highest weight space of L_l is not a line")
    return QuotientTruncation(pc, l, direct_sum(mod.dimension, parts), mod.dimension,
                              weight_dims, method)


def weyl_dimension(lam: Weight) -> int:
    if not lam.is_dominant_integral():
        raise InvalidInputError(f"weyl_dimension needs a dominant integral weight, got {lam}")
    n = lam.rank + 1
    num = Fraction(1)
    for i, j in build_root_datum(n).positive_roots:
        num *= Fraction(sum(lam.coords[t - 1] + 1 for t in range(i, j)), j - i)
    assert num.denominator == 1
    return num.numerator


@dataclass(frozen=True)
class Classification:
    kind: str                 # "finite" | "infinite" | "inconclusive"
    dims: tuple               # dim L_l for l = 0..probe_level
    dimension: int | None = None
    tags: tuple = ()

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"


def classify(pc: ParabolicCharacter, probe_level: int) -> Classification:
    """Finite/infinite verdict witnessed by the dim L_l sequence; never extrapolates.

    Dominant integral lambda: finite once dim L_l has stopped growing at the
    Weyl dimension.  Otherwise infinite when dim L_l grows strictly at every
    probed step (a stationary step would make L_l a submodule, hence all of L).
    """
    if probe_level < 1:
        raise InvalidInputError("probe_level must be >= 1")
    dims = tuple(maximal_submodule_trunc(pc, l).dim_L for l in range(probe_level + 1))
    tags = ("C3",) if all(l < 0 for l in pc.ell) else ()
    if pc.lam.is_dominant_integral():
        target = weyl_dimension(pc.lam)
        if dims[-1] == dims[-2] == target:
            return Classification("finite", dims, target)
        return Classification("inconclusive", dims)
    if all(b > a for a, b in zip(dims, dims[1:])):
        return Classification("infinite", dims, None, tags)
    return Classification("inconclusive", dims, None, tags)
