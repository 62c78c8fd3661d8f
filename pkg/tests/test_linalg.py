from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfsmith.fields import GF, QQ
from hopfsmith.linalg import (AffineSystem, Mat, invert, kron, nullspace, rank,
                              solve_affine, spans_equal)


def qmat(rows):
    return Mat.from_rows(QQ, rows)


def test_solve_affine_identity_case():
    sol = solve_affine(AffineSystem(qmat([[1]]), [Fraction(0)]))
    assert sol.particular == [Fraction(0)]
    assert sol.nullspace.cols == 0


def test_solve_affine_underdetermined():
    a = qmat([[1, 1], [1, 1]])
    sol = solve_affine(AffineSystem(a, [Fraction(2), Fraction(2)]))
    assert a.matvec(sol.particular) == [Fraction(2), Fraction(2)]
    assert sol.nullspace.cols == 1
    v = sol.nullspace.column(0)
    # spans {[1, -1]}
    assert v[0] == -v[1] != 0
    # any combination still solves exactly
    shifted = [p + 7 * x for p, x in zip(sol.particular, v)]
    assert a.matvec(shifted) == [Fraction(2), Fraction(2)]


def test_solve_affine_infeasible():
    assert solve_affine(AffineSystem(qmat([[1], [0]]), [Fraction(0), Fraction(1)])) is None


def test_nullspace_examples():
    assert nullspace(Mat.identity(QQ, 3)).cols == 0
    assert nullspace(Mat.zeros(QQ, 2, 2)).cols == 2
    ns = nullspace(qmat([[1, 2], [2, 4]]))
    assert ns.cols == 1
    v = ns.column(0)
    assert spans_equal(QQ, [v], [[Fraction(2), Fraction(-1)]])


def test_invert_examples():
    assert invert(Mat.identity(QQ, 4)) == Mat.identity(QQ, 4)
    swap = qmat([[0, 1], [1, 0]])
    assert invert(swap) == swap
    up = qmat([[1, 1], [0, 1]])
    assert invert(up) == qmat([[1, -1], [0, 1]])
    assert invert(qmat([[1, 2], [2, 4]])) is None
    with pytest.raises(ValueError):
        invert(qmat([[1, 2]]))


def test_prime_field_solving():
    f = GF(3)
    a = Mat.from_rows(f, [[1, 2], [2, 2]])
    sol = solve_affine(AffineSystem(a, [1, 2]))
    assert sol is not None
    assert a.matvec(sol.particular) == [1, 2]
    inv = invert(a)
    assert inv is not None and a.mul(inv) == Mat.identity(f, 2)


def test_kron_shape_and_values():
    a = qmat([[1, 2]])
    b = qmat([[3], [5]])
    k = kron(a, b)
    assert (k.rows, k.cols) == (2, 2)
    assert k.data == [[3, 6], [5, 10]]


@st.composite
def small_qq_matrix(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    entries = draw(st.lists(
        st.integers(-4, 4).map(Fraction), min_size=rows * cols, max_size=rows * cols))
    data = [entries[r * cols:(r + 1) * cols] for r in range(rows)]
    return Mat(QQ, rows, cols, data)


@settings(max_examples=60, deadline=None)
@given(small_qq_matrix())
def test_rank_nullity(m):
    assert rank(m) + nullspace(m).cols == m.cols


@settings(max_examples=60, deadline=None)
@given(small_qq_matrix())
def test_nullspace_vectors_annihilate(m):
    ns = nullspace(m)
    for j in range(ns.cols):
        assert all(x == 0 for x in m.matvec(ns.column(j)))


@settings(max_examples=60, deadline=None)
@given(small_qq_matrix(), st.data())
def test_solve_affine_exactness(m, data):
    x = data.draw(st.lists(st.integers(-3, 3).map(Fraction),
                           min_size=m.cols, max_size=m.cols))
    b = m.matvec(x)
    sol = solve_affine(AffineSystem(m, b))
    assert sol is not None
    assert m.matvec(sol.particular) == b


@settings(max_examples=40, deadline=None)
@given(small_qq_matrix())
def test_invert_round_trip(m):
    if m.rows != m.cols:
        return
    inv = invert(m)
    if inv is not None:
        assert m.mul(inv) == Mat.identity(QQ, m.rows)
        assert inv.mul(m) == Mat.identity(QQ, m.rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 30).map(lambda s: s))
def test_prime_field_rank_nullity(seed):
    import random
    rng = random.Random(seed)
    f = GF(5)
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    m = Mat(f, rows, cols, [[rng.randrange(5) for _ in range(cols)] for _ in range(rows)])
    assert rank(m) + nullspace(m).cols == cols
