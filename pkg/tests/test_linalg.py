import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from altalg.linalg import Matrix, nullspace, rank, rref, solve, span
from altalg.scalars import GF, Q


def test_rank_of_singular_rational_matrix():
    m = Matrix.from_rows(Q, [[1, 2], [2, 4]])
    assert rank(m) == 1
    ns = nullspace(m)
    assert ns.dimension == 1
    assert ns.contains((-2, 1))


def test_rank_over_gf2():
    m = Matrix.from_rows(GF(2), [[1, 1], [1, 1]])
    assert rank(m) == 1


def test_solve_gives_particular_solution():
    m = Matrix.from_rows(Q, [[1, 1, 0], [0, 1, 1]])
    v = solve(m, [2, 3])
    assert m.matvec(v) == (2, 3)
    # free variable set to zero
    assert v[2] == 0
    assert solve(Matrix.from_rows(Q, [[1, 1], [1, 1]]), [0, 1]) is None


def test_rref_is_canonical():
    f = Q
    a = span(f, [(1, 2, 3), (0, 1, 1)], 3)
    b = span(f, [(1, 3, 4), (2, 4, 6), (1, 1, 2)], 3)
    assert a == b
    red, piv = rref(f, [(0, 2, 4), (0, 1, 2)], 3)
    assert red == [(0, 1, 2)] and piv == [1]


def test_nullspace_of_full_rank_is_trivial():
    assert nullspace(Matrix.identity(GF(7), 4)).dimension == 0


def test_matmul_and_transpose():
    a = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    b = Matrix.from_rows(Q, [[0, 1], [1, 0]])
    assert (a @ b).entries == ((2, 1), (4, 3))
    assert a.transpose().entries == ((1, 3), (2, 4))
    assert a.scale(Fraction(1, 2))[1, 1] == 2


def test_overflow_propagates_from_elimination():
    big = 2**120
    m = Matrix.from_rows(Q, [[big, 1], [1, big]])
    with pytest.raises(OverflowError):
        nullspace(m)


small_q = st.integers(-5, 5)


@st.composite
def rational_matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    rows = draw(st.lists(st.lists(small_q, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(Q, rows, c)


@given(rational_matrices())
@settings(max_examples=150)
def test_rank_matches_sympy(m):
    oracle = sympy.Matrix([list(r) for r in m.entries]).rank()
    assert rank(m) == oracle


@given(rational_matrices())
@settings(max_examples=150)
def test_rank_nullity_and_kernel(m):
    ns = nullspace(m)
    assert rank(m) + ns.dimension == m.cols
    for v in ns:
        assert all(c == 0 for c in m.matvec(v))


@given(rational_matrices(), st.data())
@settings(max_examples=150)
def test_solve_on_consistent_systems(m, data):
    x = data.draw(st.lists(small_q, min_size=m.cols, max_size=m.cols))
    b = m.matvec(x)
    v = solve(m, b)
    assert v is not None and m.matvec(v) == b


@pytest.mark.parametrize("p", [2, 3, 5])
def test_gf_nullspace_matches_enumeration(p):
    # kernel size counted by brute force over all vectors
    f = GF(p)
    m = Matrix.from_rows(f, [[1, 2 % p, 0, 1], [0, 1, 1, 1], [1, (2 + 1) % p, 1, 2 % p]])
    count = sum(1 for v in itertools.product(range(p), repeat=4) if all(c == 0 for c in m.matvec(v)))
    ns = nullspace(m)
    assert count == p ** ns.dimension
    assert rank(m) + ns.dimension == 4
