"""Acceptance criteria 1-11, exact equality throughout.

Each test feeds the ``criterion`` fixture; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import io
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from oracles import gt_count
from sgverma.checks import check_homomorphism, check_ledgers, check_module_axioms
from sgverma.cli import run
from sgverma.ideals import ann_ideal_trunc, ann_via_generators, char_ideal_trunc, rho_u_kernel_check
from sgverma.quotient import (classify, maximal_submodule_trunc, shapovalov_radical_weightspace,
                              submodule_membership_weightspace, weyl_dimension)
from sgverma.rootdata import ParabolicCharacter, m_of_lambda
from sgverma.verma import TruncatedModule, weight_spaces

GOLDEN = Path(__file__).parent / "golden"
HALF = Fraction(1, 2)

DOMINANT_FULL = [(2, (1,), (3,)), (3, (1, 2), (2, 3)), (3, (1, 2), (1, 1))]


def pc_of(cfg):
    return ParabolicCharacter(*cfg)


# 1 -------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_c01_homomorphism(n, criterion):
    ok = check_homomorphism(n, trials=100, seed=100 + n, max_degree=3)
    criterion(1, "fundamental representation is multiplicative", ok, f"sl_{n}")
    assert ok


# 2 -------------------------------------------------------------------------

MODULE_CONFIGS = [
    (2, (1,), (3,)), (2, (1,), (-2,)),
    (3, (1,), (2,)), (3, (1,), (-1,)),
    (3, (1, 2), (1, 1)), (3, (1, 2), (-1, -2)),
    (4, (2,), (1,)), (4, (2,), (-1,)),
]


@pytest.mark.parametrize("cfg", MODULE_CONFIGS, ids=str)
def test_c02_module_axioms(cfg, criterion):
    ok = check_module_axioms(pc_of(cfg), 4)
    criterion(2, "module axioms on M_l, l <= 4", ok, str(cfg))
    assert ok


# 3 -------------------------------------------------------------------------

@pytest.mark.parametrize("cfg", DOMINANT_FULL, ids=str)
def test_c03_equality_range(cfg, criterion):
    pc = pc_of(cfg)
    m = m_of_lambda(pc.lam)
    same = all(char_ideal_trunc(pc, l).subspace == ann_ideal_trunc(pc, l).subspace
               for l in range(1, m + 1))
    strict = ann_ideal_trunc(pc, m + 1).dim > char_ideal_trunc(pc, m + 1).dim
    criterion(3, "ann_l = char_l exactly for l <= m(lambda), strict at m+1", same and strict, str(cfg))
    assert same and strict


# 4 -------------------------------------------------------------------------

GENERATOR_CASES = [(cfg, l) for cfg in DOMINANT_FULL
                 for l in range(m_of_lambda(pc_of(cfg).lam) + 3)]


@pytest.mark.parametrize("cfg,l", GENERATOR_CASES, ids=str)
def test_c04_generator_description(cfg, l, criterion):
    pc = pc_of(cfg)
    gen = ann_via_generators(pc.lam, l)
    ann = ann_ideal_trunc(pc, l)
    ok = gen.subspace == ann.subspace
    criterion(4, "generator description of ann_l for l <= m(lambda)+2", ok,
              f"{cfg} l={l}: {gen.dim} vs {ann.dim}")
    assert ok, f"generator span has dim {gen.dim}, ann_{l} has dim {ann.dim}"


# 5 -------------------------------------------------------------------------

LEDGER_CONFIGS = DOMINANT_FULL + [(3, (1,), (3,)), (3, (1,), (-1,)), (2, (1,), (-2,)),
                                  (2, (1,), (HALF,)), (4, (2,), (1,))]


@pytest.mark.parametrize("cfg", LEDGER_CONFIGS, ids=str)
def test_c05_ledgers(cfg, criterion):
    pc = pc_of(cfg)
    top = 2 if pc.n == 4 else 4
    ok = all(check_ledgers(pc, l) and TruncatedModule(pc, l).dimension == comb(pc.m + l, l)
             for l in range(top + 1))
    criterion(5, "dimension ledgers", ok, str(cfg))
    assert ok


# 6 -------------------------------------------------------------------------

def dims_L(pc, top):
    return [maximal_submodule_trunc(pc, l).dim_L for l in range(top + 1)]


def test_c06_stabilization(criterion):
    sl2 = dims_L(ParabolicCharacter(2, (1,), (3,)), 6)
    ok_sl2 = sl2[3:] == [4] * 4 and weyl_dimension(ParabolicCharacter(2, (1,), (3,)).lam) == 4
    criterion(6, "simple quotient stabilization", ok_sl2, f"sl_2 d=3 {sl2}")

    adj = dims_L(ParabolicCharacter(3, (1, 2), (1, 1)), 6)
    ok_adj = adj[4:] == [8, 8, 8] and gt_count((2, 1, 0)) == 8
    criterion(6, "simple quotient stabilization", ok_adj, f"sl_3 (1,1) {adj}")

    sym = dims_L(ParabolicCharacter(3, (1,), (3,)), 5)
    ok_sym = (sym[:4] == [comb(l + 2, 2) for l in range(4)] and sym[4:] == [10, 10]
              and gt_count((3, 0, 0)) == 10)
    criterion(6, "simple quotient stabilization", ok_sym, f"sl_3 flag [1] l=3 {sym}")
    assert ok_sl2 and ok_adj and ok_sym


# 7 -------------------------------------------------------------------------

@pytest.mark.parametrize("cfg", [(2, (1,), (-2,)), (3, (1,), (-1,))], ids=str)
def test_c07_infinite(cfg, criterion):
    pc = pc_of(cfg)
    ok = True
    for l in range(9):
        for method in ("raising", "shapovalov"):
            ok &= maximal_submodule_trunc(pc, l, method).dim_K == 0
    d = dims_L(pc, 8)
    ok &= all(b > a for a, b in zip(d, d[1:]))
    ok &= d == [comb(pc.m + l, l) for l in range(9)]
    verdict = classify(pc, 8)
    ok &= verdict.is_infinite and "C3" in verdict.tags
    criterion(7, "infinite-dimensional simple quotients", ok, str(cfg))
    assert ok


# 8 -------------------------------------------------------------------------

ORACLE_CONFIGS = [
    (2, (1,), (3,)), (2, (1,), (0,)), (2, (1,), (-2,)), (2, (1,), (HALF,)),
    (3, (1, 2), (1, 1)), (3, (1, 2), (0, 0)), (3, (1, 2), (-1, -1)), (3, (1, 2), (HALF, 0)),
    (3, (1, 2), (2, 0)), (3, (1,), (2,)), (3, (1,), (-1,)), (3, (2,), (HALF,)), (3, (2,), (0,)),
]


@pytest.mark.parametrize("cfg", ORACLE_CONFIGS, ids=str)
def test_c08_oracle_agreement(cfg, criterion):
    pc = pc_of(cfg)
    ok = all(submodule_membership_weightspace(pc, mu, 6) == shapovalov_radical_weightspace(pc, mu, 6)
             for mu in weight_spaces(pc, 6))
    ok &= maximal_submodule_trunc(pc, 6).K == maximal_submodule_trunc(pc, 6, "shapovalov").K
    criterion(8, "raising kernel = contravariant radical, depth 6", ok, str(cfg))
    assert ok


# 9 -------------------------------------------------------------------------

def test_c09_parabolic_vs_borel(criterion):
    par = ParabolicCharacter(3, (1,), (2,))
    bor = ParabolicCharacter(3, (1, 2), (2, 0))
    a, b = dims_L(par, 5), dims_L(bor, 5)
    ok = a == b and par.lam == bor.lam
    criterion(9, "parabolic and Borel realizations agree", ok, f"{a} vs {b}")
    assert ok


# 10 ------------------------------------------------------------------------

RHO_U_CONFIGS = [(2, (1,), (3,)), (2, (1,), (-2,)), (3, (1, 2), (1, 1)), (3, (1, 2), (-1, 2)),
                 (3, (1,), (2,)), (3, (1,), (-1,)), (3, (1,), (HALF,))]


@pytest.mark.parametrize("cfg", RHO_U_CONFIGS, ids=str)
def test_c10_rho_u_kernel(cfg, criterion):
    pc = pc_of(cfg)
    ok = True
    for l in range(4):
        r = rho_u_kernel_check(pc, l)
        ok &= r.passed and r.dim_U_p - r.kernel_dim == 1
    criterion(10, "kernel of rho on U_l(p) has codimension 1", ok, str(cfg))
    assert ok


# 11 ------------------------------------------------------------------------

GOLDEN_CASES = {
    "annihilator_sl2_d3.json": ["annihilator", "--n", "2", "--flag", "1", "--weights", "3",
                                "--max-level", "4"],
    "jets_sl3_flag1_d3.json": ["jets", "--n", "3", "--flag", "1", "--weights", "3", "--max-level", "4"],
    "basis_sl3_full_23.json": ["basis", "--n", "3", "--flag", "1,2", "--weights", "2,3", "--level", "0"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_c11_cli_golden(name, criterion):
    out, err = io.StringIO(), io.StringIO()
    code = run(GOLDEN_CASES[name], out, err)
    ok = code == 0 and out.getvalue().encode() == (GOLDEN / name).read_bytes()
    criterion(11, "CLI golden files byte-identical", ok, name)
    assert ok
