import random
from fractions import Fraction

import pytest

from sgverma.checks import check_jacobi
from sgverma.errors import InvalidInputError, NotInParabolicError
from sgverma.rootdata import (ChevalleyElement, ParabolicCharacter, Weight, bracket,
                              build_root_datum, complement_roots, delta_weight, eval_character,
                              m_alpha, m_of_lambda, root_weight, weight_of_monomial)


def E(n, i, j, c=1):
    return ChevalleyElement.gen(n, (i, j), c)


def diag(*entries):
    n = len(entries)
    return ChevalleyElement.from_matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 6), (5, 10)])
def test_positive_root_count(n, count):
    rd = build_root_datum(n)
    assert len(rd.positive_roots) == count == n * (n - 1) // 2
    assert rd.simple_roots == tuple((i, i + 1) for i in range(1, n))


def test_sl3_roots():
    assert set(build_root_datum(3).positive_roots) == {(1, 2), (2, 3), (1, 3)}
    assert build_root_datum(2).positive_roots == ((1, 2),)


def test_positive_roots_are_nonnegative_simple_combinations():
    rd = build_root_datum(5)
    for r in rd.positive_roots:
        exp = rd.simple_root_expansion(r)
        assert all(e >= 0 for e in exp)
        total = Weight.zero(5)
        for t, e in enumerate(exp, start=1):
            total = total + root_weight(5, t, t + 1) * e
        assert total == root_weight(5, *r)


def test_root_datum_rejects_small_n():
    with pytest.raises(InvalidInputError):
        build_root_datum(1)


def test_bracket_examples():
    assert bracket(E(2, 1, 2), E(2, 2, 1)) == ChevalleyElement.gen(2, (1, 1))
    assert bracket(E(3, 1, 2), E(3, 2, 3)) == E(3, 1, 3)
    assert bracket(ChevalleyElement.gen(2, (1, 1)), E(2, 1, 2)) == E(2, 1, 2, 2)


def test_bracket_antisymmetric_and_mismatch():
    x, y = E(3, 2, 1), E(3, 1, 3) + ChevalleyElement.gen(3, (2, 2), 5)
    assert bracket(x, y) == -bracket(y, x)
    with pytest.raises(InvalidInputError):
        bracket(E(2, 1, 2), E(3, 1, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jacobi_random(n):
    assert check_jacobi(n, trials=100, seed=n)


def test_weight_of_monomial():
    full3 = ParabolicCharacter.full_flag(3, (0, 0))
    assert weight_of_monomial((0, 0, 0), full3) == Weight((0, 0))
    # complement order for the full flag is (E21, E32, E31) = (-a1, -a2, -(a1+a2))
    got = weight_of_monomial((1, 0, 2), full3)
    expected = -(root_weight(3, 1, 2) * 3 + root_weight(3, 2, 3) * 2)
    assert got == expected
    sl2 = ParabolicCharacter(2, (1,), (0,))
    for p in range(5):
        assert weight_of_monomial((p,), sl2) == Weight((-2 * p,))
    with pytest.raises(InvalidInputError):
        weight_of_monomial((1, 2), sl2)


def test_delta_weight_values():
    # half of a_1 = w_1 in sl_2; (a1 + a2 + (a1+a2))/2 = w1 + w2 in sl_3
    assert delta_weight(2) == Weight((1,))
    assert delta_weight(3) == Weight((1, 1))
    for n in range(2, 7):
        d = delta_weight(n)
        assert all(c == 1 for c in d.coords)
        assert all(d.evaluate_coroot(t) == 1 for t in range(1, n))


def test_eval_character_diagonal_formula():
    pc = ParabolicCharacter(3, (1, 2), (2, 3))
    assert pc.diag_coeffs == (5, 3, 0)
    for a, b in [(1, 2), (Fraction(1, 3), -4), (7, 0)]:
        x = diag(a, b, -a - b)
        assert eval_character(pc, x) == 5 * a + 3 * b
    assert eval_character(pc, E(3, 1, 2) + E(3, 1, 3, 4)) == 0
    assert eval_character(pc, ChevalleyElement.gen(3, (1, 1))) == 2
    assert eval_character(pc, ChevalleyElement.gen(3, (2, 2))) == 3


def test_eval_character_rejects_outside_p():
    pc = ParabolicCharacter(3, (1,), (2,))
    assert eval_character(pc, E(3, 3, 2)) == 0  # inside the 2x2 block
    with pytest.raises(NotInParabolicError):
        eval_character(pc, E(3, 2, 1))


@pytest.mark.parametrize("n,flag,ell", [
    (2, (1,), (3,)), (3, (1,), (-2,)), (3, (2,), (5,)), (3, (1, 2), (2, 3)),
    (4, (2,), (1,)), (4, (1, 3), (Fraction(1, 2), -1)), (5, (1, 2, 4), (1, 0, 3)),
])
def test_rho_restricts_to_lambda(n, flag, ell):
    pc = ParabolicCharacter(n, flag, ell)
    for t in range(1, n):
        assert eval_character(pc, ChevalleyElement.gen(n, (t, t))) == pc.lam.coords[t - 1]


def test_m_alpha_and_m_lambda():
    lam = Weight((2, 3))
    assert (m_alpha(lam, 1), m_alpha(lam, 2), m_of_lambda(lam)) == (3, 4, 2)
    zero = Weight((0, 0, 0))
    assert [m_alpha(zero, i) for i in (1, 2, 3)] == [1, 1, 1] and m_of_lambda(zero) == 0
    assert m_alpha(Weight((3,)), 1) == 4 and m_of_lambda(Weight((3,))) == 3
    with pytest.raises(InvalidInputError):
        m_alpha(Weight((Fraction(1, 2),)), 1)


def test_complement_roots():
    assert complement_roots(ParabolicCharacter.full_flag(3, (0, 0))) == [(2, 1), (3, 2), (3, 1)]
    assert complement_roots(ParabolicCharacter(3, (1,), (1,))) == [(2, 1), (3, 1)]
    sl4 = complement_roots(ParabolicCharacter(4, (2,), (1,)))
    assert set(sl4) == {(3, 1), (3, 2), (4, 1), (4, 2)}
    assert ParabolicCharacter(4, (2,), (1,)).m == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_full_flag_complement_is_all_negative_roots(n):
    pc = ParabolicCharacter.full_flag(n, [0] * (n - 1))
    assert pc.m == n * (n - 1) // 2
    assert pc.complement == tuple(build_root_datum(n).negative_generators)


def test_parabolic_validation():
    with pytest.raises(InvalidInputError):
        ParabolicCharacter(3, (2, 1), (1, 1))
    with pytest.raises(InvalidInputError):
        ParabolicCharacter(3, (1,), (1, 2))
    with pytest.raises(InvalidInputError):
        ParabolicCharacter(3, (3,), (1,))
    with pytest.raises(InvalidInputError):
        ParabolicCharacter(3, (1,), (0.5,))


def test_block_data():
    pc = ParabolicCharacter(5, (1, 3), (2, -1))
    assert pc.block_sizes == (1, 2, 2)
    assert pc.lam == Weight((2, 0, -1, 0))
    rng = random.Random(1)
    for _ in range(20):
        i, j = rng.sample(range(1, 6), 2)
        assert pc.contains((i, j)) == (pc.block(i) <= pc.block(j))
