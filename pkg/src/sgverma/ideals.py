"""Truncated character ideals, I_l(v), truncated annihilators and the equality report.

All ideals are subspaces of U_l(g) in the coordinates of
``enumerate_pbw(EnvelopingAlgebra.for_character(pc), l)``.  With that
ordering a normal monomial factors as X^P * Y with Y in U(p), so
u (x) w = rho(Y) X^P (x) w can be read off without further straightening.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DependencyError, InvalidInputError, InvariantViolation
from .exactla import TruncatedSubspace, coordinate_subspace, intersect, kernel, rref
from .pbw import EnvelopingAlgebra, PBWMonomial, enumerate_pbw
from .quotient import QuotientTruncation, maximal_submodule_trunc
from .rootdata import ParabolicCharacter, Weight, build_root_datum
from .verma import GeneralizedVerma, TruncatedModule


@dataclass(frozen=True)
class IdealTruncation:
    pc: ParabolicCharacter
    level: int
    monomials: tuple
    subspace: TruncatedSubspace

    @property
    def dim(self) -> int:
        return self.subspace.rank

    def contains(self, element) -> bool:
        """Membership test for a UEAElement of the matching algebra."""
        index = _monomial_index(self.pc, self.level)
        try:
            row = {index[M]: c for M, c in element.terms.items()}
        except KeyError:
            return False
        return self.subspace.contains_vector(row)


@lru_cache(maxsize=None)
def _monomials(pc: ParabolicCharacter, l: int) -> tuple:
    return tuple(enumerate_pbw(EnvelopingAlgebra.for_character(pc), l))


@lru_cache(maxsize=None)
def _monomial_index(pc: ParabolicCharacter, l: int) -> dict:
    return {M: k for k, M in enumerate(_monomials(pc, l))}


def _row(index: dict, terms: dict) -> dict:
    return {index[M]: c for M, c in terms.items() if c}


def _generated_rows(pc: ParabolicCharacter, l: int, generators) -> list[dict]:
    """Rows of straighten(u * (x - c)) for (x, c) in generators, deg u <= l - 1."""
    if l < 1:
        return []
    alg = EnvelopingAlgebra.for_character(pc)
    index = _monomial_index(pc, l)
    rows = []
    for u in _monomials(pc, l - 1):
        for g, c in generators:
            t = alg.right_mul_gen({u: 1}, alg.index[g])
            if c:
                t[u] = t.get(u, 0) - c
            rows.append(_row(index, t))
    return rows


def _check_level(l: int):
    if not isinstance(l, int) or l < 0:
        raise InvalidInputError(f"level must be a non-negative integer, got {l!r}")


@lru_cache(maxsize=None)
def char_ideal_trunc(pc: ParabolicCharacter, l: int) -> IdealTruncation:
    _check_level(l)
    gens = [(g, pc.rho_generator(g)) for g in pc.parabolic_basis]
    mons = _monomials(pc, l)
    sub = rref(_generated_rows(pc, l, gens), len(mons))
    expected = len(mons) - comb(pc.m + l, l)
    if sub.rank != expected:
        raise InvariantViolation(
            f"dim char_{l} = {sub.rank}, but dim U_l - dim M_l = {expected} for {pc}")
    return IdealTruncation(pc, l, mons, sub)


@lru_cache(maxsize=None)
def i_v_trunc(lam: Weight, l: int) -> IdealTruncation:
    """U_l-part of U(g) n+ + sum_{x in h} U(g)(x - lambda(x))."""
    _check_level(l)
    pc = ParabolicCharacter.from_weight(lam)
    rd = build_root_datum(pc.n)
    gens = [(r, 0) for r in rd.positive_roots]
    gens += [(h, lam.evaluate_coroot(h[0])) for h in rd.cartan_basis]
    mons = _monomials(pc, l)
    return IdealTruncation(pc, l, mons, rref(_generated_rows(pc, l, gens), len(mons)))


def _image_in_module(pc: ParabolicCharacter, M: tuple):
    """(P, value) with M (x) w = value * X^P (x) w."""
    eng = GeneralizedVerma.of(pc)
    return M[:pc.m], eng._tail_value(M)


def _restrict_K(q: QuotientTruncation, l: int) -> TruncatedSubspace:
    dim_l = comb(q.pc.m + l, l)
    if q.level == l:
        return q.K
    # the level-l basis is a prefix of the level-q basis
    K = intersect(q.K, coordinate_subspace(q.dim_M, range(dim_l)))
    return TruncatedSubspace(dim_l, K.rows)


@lru_cache(maxsize=None)
def _ann_cached(pc: ParabolicCharacter, l: int) -> IdealTruncation:
    return _ann(pc, l, maximal_submodule_trunc(pc, l))


def ann_ideal_trunc(pc: ParabolicCharacter, l: int,
                    quotient: QuotientTruncation | None = None) -> IdealTruncation:
    """Kernel of U_l(g) -> M_l(rho) -> L_l(rho), u -> u v."""
    _check_level(l)
    if quotient is None:
        return _ann_cached(pc, l)
    if quotient.pc != pc or quotient.level < l:
        raise DependencyError(f"quotient at level {quotient.level} cannot serve level {l}")
    return _ann(pc, l, quotient)


def _ann(pc: ParabolicCharacter, l: int, quotient: QuotientTruncation) -> IdealTruncation:
    K = _restrict_K(quotient, l)
    mod = TruncatedModule(pc, l)
    mons = _monomials(pc, l)
    rows = []
    for M in mons:
        P, val = _image_in_module(pc, M)
        rows.append(K.reduce_modulo({mod.index[P]: val}) if val else {})
    sub = kernel(rows, mod.dimension)
    expected = len(mons) - (mod.dimension - K.rank)
    if sub.rank != expected:
        raise InvariantViolation(f"dim ann_{l} = {sub.rank}, expected dim U_l - dim L_l = {expected}")
    return IdealTruncation(pc, l, mons, sub)


@lru_cache(maxsize=None)
def ann_via_generators(lam: Weight, l: int) -> IdealTruncation:
    """I_l(v) + sum_i U_{l - l_i - 1}(g) E_{i+1,i}^{l_i + 1}, for dominant integral lambda."""
    _check_level(l)
    if not lam.is_dominant_integral():
        raise InvalidInputError(f"generator description needs dominant integral lambda, got {lam}")
    pc = ParabolicCharacter.from_weight(lam)
    alg = EnvelopingAlgebra.for_character(pc)
    index = _monomial_index(pc, l)
    rows = [dict(r) for r in i_v_trunc(lam, l).subspace.rows]
    for i in range(1, pc.n):
        e = lam.coords[i - 1] + 1
        if l - e < 0:
            continue
        k = alg.index[(i + 1, i)]
        for u in _monomials(pc, l - e):
            t = {u: 1}
            for _ in range(e):
                t = alg.right_mul_gen(t, k)
            rows.append(_row(index, t))
    mons = _monomials(pc, l)
    return IdealTruncation(pc, l, mons, rref(rows, len(mons)))


@dataclass(frozen=True)
class RhoKernelReport:
    level: int
    dim_U_p: int
    span_dim: int
    kernel_dim: int
    equal: bool

    @property
    def passed(self) -> bool:
        return self.equal and self.kernel_dim == max(self.dim_U_p - 1, 0)


def rho_u_kernel_check(pc: ParabolicCharacter, l: int) -> RhoKernelReport:
    """Compare U_{l-1}(p){x - rho(x)} with ker(rho_U) inside U_l(p)."""
    _check_level(l)
    alg = EnvelopingAlgebra.for_character(pc)
    mons = enumerate_pbw(alg, l, "parabolic", pc)
    index = {M: k for k, M in enumerate(mons)}
    rows = []
    if l >= 1:
        for u in enumerate_pbw(alg, l - 1, "parabolic", pc):
            for g in pc.parabolic_basis:
                t = alg.right_mul_gen({u: 1}, alg.index[g])
                c = pc.rho_generator(g)
                if c:
                    t[u] = t.get(u, 0) - c
                rows.append(_row(index, t))
    span = rref(rows, len(mons))
    eng = GeneralizedVerma.of(pc)
    functional = [{0: v} if (v := eng._tail_value(M)) else {} for M in mons]
    ker = kernel(functional, 1)
    return RhoKernelReport(l, len(mons), span.rank, ker.rank, span == ker)


def equality_report(pc: ParabolicCharacter, l_max: int) -> list[dict]:
    if l_max < 1:
        raise InvalidInputError("l_max must be >= 1")
    rows = []
    for l in range(l_max + 1):
        ch = char_ideal_trunc(pc, l)
        an = ann_ideal_trunc(pc, l)
        rows.append({"level": l, "dim_char": ch.dim, "dim_ann": an.dim,
                     "equal": ch.subspace == an.subspace})
    return rows
