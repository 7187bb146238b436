"""Bounded invariant suite behind the ``verify`` command."""
from __future__ import annotations

import random
from math import comb
from typing import Callable

from .exactla import subspace_sum
from .ideals import (ann_ideal_trunc, ann_via_generators, char_ideal_trunc, i_v_trunc,
                     rho_u_kernel_check)
from .pbw import EnvelopingAlgebra, UEAElement, enumerate_pbw, fundamental_matrix, multiply
from .quotient import (maximal_submodule_trunc, shapovalov_radical_weightspace,
                       submodule_membership_weightspace)
from .rootdata import (ChevalleyElement, ParabolicCharacter, bracket, build_root_datum,
                       delta_weight, eval_character, m_of_lambda)
from .verma import (ModuleVector, TruncatedModule, act, projection_kernel, weight_spaces)


def random_element(alg: EnvelopingAlgebra, rng: random.Random, max_degree: int,
                   terms: int = 3) -> UEAElement:
    mons = enumerate_pbw(alg, max_degree)
    return UEAElement(alg, {rng.choice(mons): rng.randint(-3, 3) for _ in range(terms)})


def random_chevalley(n: int, rng: random.Random) -> ChevalleyElement:
    gens = build_root_datum(n).generator_order
    return ChevalleyElement(n, {g: rng.randint(-3, 3) for g in rng.sample(gens, min(4, len(gens)))})


def check_jacobi(n: int, trials: int = 100, seed: int = 0) -> bool:
    rng = random.Random(seed)
    zero = ChevalleyElement(n)
    for _ in range(trials):
        x, y, z = (random_chevalley(n, rng) for _ in range(3))
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if s != zero:
            return False
    return True


def check_homomorphism(n: int, trials: int = 100, seed: int = 0, max_degree: int = 3) -> bool:
    rng = random.Random(seed)
    alg = EnvelopingAlgebra.get(n)
    for _ in range(trials):
        a = random_element(alg, rng, max_degree)
        b = random_element(alg, rng, max_degree)
        if not (fundamental_matrix(multiply(a, b)) == fundamental_matrix(a).dot(fundamental_matrix(b))).all():
            return False
    return True


def check_associativity(n: int, trials: int = 100, seed: int = 0) -> bool:
    rng = random.Random(seed)
    alg = EnvelopingAlgebra.get(n)
    for _ in range(trials):
        a, b, c = (random_element(alg, rng, 2) for _ in range(3))
        if (a * b) * c != a * (b * c):
            return False
    return True


def check_rho_restricts_to_lambda(pc: ParabolicCharacter) -> bool:
    return all(eval_character(pc, ChevalleyElement.gen(pc.n, (t, t))) == pc.lam.coords[t - 1]
               for t in range(1, pc.n))


def check_delta(n: int) -> bool:
    return all(c == 1 for c in delta_weight(n).coords)


def check_module_axioms(pc: ParabolicCharacter, l: int) -> bool:
    """act([x,y], m) == x(y m) - y(x m) for every generator pair and basis vector of M_l."""
    alg = EnvelopingAlgebra.get(pc.n)
    gens = build_root_datum(pc.n).generator_order
    mod = TruncatedModule(pc, l)
    for P in mod.basis:
        v = ModuleVector.basis_vector(pc, P)
        for i, x in enumerate(gens):
            for y in gens[i + 1:]:
                xy = alg.from_chevalley(bracket(ChevalleyElement.gen(pc.n, x), ChevalleyElement.gen(pc.n, y)))
                lhs = act(xy, v)
                rhs = act(alg.gen(x), act(alg.gen(y), v)) - act(alg.gen(y), act(alg.gen(x), v))
                if lhs != rhs:
                    return False
    return True


def check_weight_grading(pc: ParabolicCharacter, l: int) -> bool:
    alg = EnvelopingAlgebra.get(pc.n)
    mod = TruncatedModule(pc, l)
    for P in mod.basis:
        v = ModuleVector.basis_vector(pc, P)
        wt = mod.weight(P)
        for t in range(1, pc.n):
            if act(alg.gen((t, t)), v) != v * wt.coords[t - 1]:
                return False
    return True


def check_ledgers(pc: ParabolicCharacter, l: int) -> bool:
    dim_U = comb(pc.n * pc.n - 1 + l, l)
    dim_M = comb(pc.m + l, l)
    q = maximal_submodule_trunc(pc, l)
    return (TruncatedModule(pc, l).dimension == dim_M
            and char_ideal_trunc(pc, l).dim == dim_U - dim_M
            and ann_ideal_trunc(pc, l).dim == dim_U - q.dim_L
            and dim_M == q.dim_K + q.dim_L)


def check_char_in_ann(pc: ParabolicCharacter, l: int) -> bool:
    return char_ideal_trunc(pc, l).subspace.issubspace(ann_ideal_trunc(pc, l).subspace)


def check_left_ideal(pc: ParabolicCharacter, l: int) -> bool:
    """Generators times basis elements of char_l land in char_{l+1}."""
    alg = EnvelopingAlgebra.for_character(pc)
    low = char_ideal_trunc(pc, l)
    high = char_ideal_trunc(pc, l + 1)
    for row in low.subspace.rows:
        elt = UEAElement(alg, {low.monomials[c]: v for c, v in row})
        for g in alg.order:
            if not high.contains(alg.gen(g) * elt):
                return False
    return True


def check_oracles(pc: ParabolicCharacter, l: int) -> bool:
    for mu in weight_spaces(pc, l):
        if submodule_membership_weightspace(pc, mu, l) != shapovalov_radical_weightspace(pc, mu, l):
            return False
    return True


def check_parabolic_vs_borel(pc: ParabolicCharacter, l: int) -> bool:
    borel = ParabolicCharacter.from_weight(pc.lam)
    return all(maximal_submodule_trunc(pc, k).dim_L == maximal_submodule_trunc(borel, k).dim_L
               for k in range(l + 1))


def check_projection_kernel(pc: ParabolicCharacter, l: int) -> bool:
    borel = ParabolicCharacter.from_weight(pc.lam)
    return projection_kernel(pc, l).rank == comb(borel.m + l, l) - comb(pc.m + l, l)


def check_rho_u(pc: ParabolicCharacter, l: int) -> bool:
    return all(rho_u_kernel_check(pc, k).passed for k in range(l + 1))


def check_i_v(pc: ParabolicCharacter, l: int) -> bool:
    return all(i_v_trunc(pc.lam, k).subspace == char_ideal_trunc(pc, k).subspace for k in range(l + 1))


def check_generator_description(pc: ParabolicCharacter, l: int) -> bool:
    return all(ann_via_generators(pc.lam, k).subspace == ann_ideal_trunc(pc, k).subspace
               for k in range(l + 1))


def check_char_equals_ann(pc: ParabolicCharacter, l: int) -> bool:
    m = m_of_lambda(pc.lam)
    for k in range(1, l + 1):
        same = char_ideal_trunc(pc, k).subspace == ann_ideal_trunc(pc, k).subspace
        if k <= m and not same:
            return False
        if k == m + 1 and same:
            return False
    return True


def invariant_suite(pc: ParabolicCharacter, l: int) -> list[tuple[str, Callable[[], bool]]]:
    n = pc.n
    suite = [
        ("jacobi", lambda: check_jacobi(n)),
        ("delta_is_sum_of_fundamental_weights", lambda: check_delta(n)),
        ("rho_restricts_to_lambda", lambda: check_rho_restricts_to_lambda(pc)),
        ("fundamental_homomorphism", lambda: check_homomorphism(n, trials=30)),
        ("associativity", lambda: check_associativity(n, trials=30)),
        ("module_axioms", lambda: check_module_axioms(pc, min(l, 3))),
        ("weight_grading", lambda: check_weight_grading(pc, l)),
        ("dimension_ledgers", lambda: all(check_ledgers(pc, k) for k in range(l + 1))),
        ("char_in_ann", lambda: all(check_char_in_ann(pc, k) for k in range(l + 1))),
        ("left_ideal", lambda: check_left_ideal(pc, max(l - 1, 0))),
        ("k_oracle_agreement", lambda: check_oracles(pc, l)),
        ("parabolic_vs_borel", lambda: check_parabolic_vs_borel(pc, l)),
        ("projection_kernel", lambda: check_projection_kernel(pc, l)),
        ("rho_u_kernel", lambda: check_rho_u(pc, l)),
    ]
    if pc.is_full_flag:
        suite.append(("i_v_equals_char", lambda: check_i_v(pc, l)))
        if pc.lam.is_dominant_integral():
            suite.append(("annihilator_generators", lambda: check_generator_description(pc, l)))
            suite.append(("char_equals_ann", lambda: check_char_equals_ann(pc, l)))
    return suite
