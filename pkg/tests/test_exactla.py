import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import sympy_rref
from sgverma.errors import InvalidInputError
from sgverma.exactla import (coordinate_subspace, intersect, kernel, rref, subspace_sum)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), max_size=max_rows))


def test_rref_examples():
    assert rref([(2, 0), (0, 3)]).basis == [[1, 0], [0, 1]]
    s = rref([(1, 2), (2, 4)])
    assert s.rank == 1 and s.basis == [[1, 2]]
    assert rref([], 3).rank == 0


def test_rref_rejects_ragged():
    with pytest.raises(InvalidInputError):
        rref([(1, 2), (1, 2, 3)])


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    width = len(rows[0]) if rows else 1
    got = rref(rows, width)
    assert got.basis == sympy_rref(rows)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms())
def test_rref_canonical_under_shuffle(rows, rnd):
    width = len(rows[0]) if rows else 1
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rref(shuffled, width) == rref(rows, width)


def test_kernel_examples():
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert kernel(eye).rank == 0
    assert kernel([[0, 0]] * 3).rank == 3
    k = kernel([[1], [1]])
    assert k.basis == [[1, -1]]


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    if not rows:
        return
    k = kernel(rows)
    assert k.rank + rref(rows).rank == len(rows)
    for v in k.basis:
        for col in range(len(rows[0])):
            assert sum(v[i] * Fraction(rows[i][col]) for i in range(len(rows))) == 0


def test_sum_intersect_examples():
    a = rref([(1, 0, 0)])
    b = rref([(1, 0, 0), (0, 1, 0)])
    assert subspace_sum(a, b) == b and intersect(a, b) == a
    x, y = rref([(1, 1)]), rref([(1, -1)])
    assert subspace_sum(x, y).rank == 2 and intersect(x, y).rank == 0
    with pytest.raises(InvalidInputError):
        intersect(rref([(1, 0)]), rref([(1, 0, 0)]))


def _random_subspace(rng, d):
    k = rng.randint(0, d)
    common = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)] for _ in range(rng.randint(0, 2))]
    rows = common + [[rng.randint(-2, 2) for _ in range(d)] for _ in range(k)]
    return rows


@pytest.mark.parametrize("seed", range(40))
def test_modular_dimension_identity(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 20)
    shared = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(rng.randint(0, 3))]
    a = rref(shared + _random_subspace(rng, d)[: rng.randint(0, d)], d)
    b = rref(shared + _random_subspace(rng, d)[: rng.randint(0, d)], d)
    s, i = subspace_sum(a, b), intersect(a, b)
    assert s.rank + i.rank == a.rank + b.rank
    assert i.issubspace(a) and i.issubspace(b)
    assert a.issubspace(s) and b.issubspace(s)


def test_exact_rationals_only():
    s = rref([(Fraction(1, 3), Fraction(2, 7))])
    assert all(isinstance(v, Fraction) for row in s.basis for v in row)
    assert s.basis == [[1, Fraction(6, 7)]]


def test_coordinate_subspace_and_embed():
    c = coordinate_subspace(5, [3, 1])
    assert c.pivots == (1, 3)
    e = rref([(1, 2)]).embed(4, [1, 3])
    assert e.basis == [[0, 1, 0, 2]]
