from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from shiftequiv import linalg
from shiftequiv.catalog import matrix

from conftest import sympy_charpoly


def square(n, lo=-4, hi=4):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 4).flatmap(square)


def rect(r, c, lo=-5, hi=5):
    return st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)


rects = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(lambda rc: rect(*rc))


@given(matrices)
def test_det_against_sympy(m):
    assert linalg.det(m) == sympy.Matrix(m).det()


@given(matrices)
def test_char_poly_against_sympy(m):
    assert linalg.char_poly(m) == sympy_charpoly(m)


@given(matrices)
def test_adjugate_identity(m):
    n = len(m)
    d = linalg.det(m)
    assert linalg.mat_mul(m, linalg.adjugate(m)) == [[d * (i == j) for j in range(n)] for i in range(n)]


@given(matrices)
def test_inverse(m):
    if linalg.det(m) == 0:
        return
    inv = linalg.inverse(m)
    n = len(m)
    assert linalg.mat_mul(m, inv) == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


@given(matrices)
def test_rank_against_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


def _minor_gcds(m):
    # d_1 ... d_k = gcd of k x k minors: an oracle independent of elimination
    from itertools import combinations
    from math import gcd

    r, c = len(m), len(m[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                g = gcd(g, int(sympy.Matrix([[m[i][j] for j in cols] for i in rows]).det()))
        out.append(g)
    return out


@given(rects)
def test_smith_form_properties(m):
    snf = linalg.smith_normal_form(m)
    assert linalg.mat_mul(linalg.mat_mul(snf.U, m), snf.V) == [list(r) for r in snf.D]
    assert abs(linalg.det(snf.U)) == 1 and abs(linalg.det(snf.V)) == 1
    f = snf.invariant_factors
    for a, b in zip(f, f[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    # product of the first k factors is the gcd of the k x k minors
    prod = 1
    for k, g in enumerate(_minor_gcds(m)):
        prod *= f[k]
        assert prod == g


def test_smith_examples():
    assert linalg.smith_normal_form([[1, 0, -1], [-1, 0, -1], [0, -1, 0]]).invariant_factors == (1, 1, 2)
    assert linalg.smith_normal_form(linalg.identity(3)).invariant_factors == (1, 1, 1)
    assert linalg.smith_normal_form([[0, 0], [0, 0]]).invariant_factors == (0, 0)


@pytest.mark.parametrize("m", [[[2, 4], [6, 8]], [[0, 1, 1], [1, 0, 1], [1, 1, 0]], [[3, 0], [0, 5]]])
def test_smith_against_sympy(m):
    ref = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    want = sorted(abs(int(ref[i, i])) for i in range(min(ref.shape)))
    assert sorted(linalg.smith_normal_form(m).invariant_factors) == want


def test_char_poly_examples():
    assert linalg.char_poly([[0, 1, 0], [0, 0, 1], [1, 0, 1]]) == (-1, 0, -1, 1)
    assert linalg.char_poly(linalg.identity(2)) == (1, -2, 1)
    assert linalg.char_poly([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == (-2, -3, 0, 1)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_hermite_membership(gens, coeffs):
    basis = linalg.hermite_rows(gens, 3)
    combo = [sum(c * g[j] for c, g in zip(coeffs, gens)) for j in range(3)]
    assert linalg.hermite_contains(basis, combo)
    # the basis spans the same lattice
    for g in gens:
        assert linalg.hermite_contains(basis, g)
    assert len(basis) == sympy.Matrix(gens).rank()


def test_lattice_contains_rational():
    gens = [(Fraction(1, 2), Fraction(1, 2)), (0, 1)]
    assert linalg.lattice_contains(gens, (Fraction(3, 2), Fraction(1, 2)))
    assert not linalg.lattice_contains(gens, (Fraction(1, 4), 0))


@given(rects, st.data())
def test_solve_integer(m, data):
    cols = len(m[0])
    x = data.draw(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols))
    b = linalg.mat_vec(m, x)
    sol = linalg.solve_integer(m, b)
    assert sol.rational and sol.particular is not None
    assert linalg.mat_vec(m, list(sol.particular)) == b
    for k in sol.kernel:
        assert not any(linalg.mat_vec(m, list(k)))
    assert len(sol.kernel) == cols - sympy.Matrix(m).rank()


def test_solve_integer_unsolvable():
    assert linalg.solve_integer([[2, 0]], [1]) == linalg.IntegerSolution(True, None, ((0, 1),))
    assert not linalg.solve_integer([[1, 1], [1, 1]], [0, 1]).rational


def test_intertwiner_lattice_identity():
    basis = linalg.intertwiner_lattice(linalg.identity(2), linalg.identity(2))
    assert len(basis) == 4


def test_intertwiner_lattice_rectangular_pair():
    a, b = [[1, 1], [1, 0]], [[1, 2], [1, 0]]
    basis = linalg.intertwiner_lattice(a, b)
    for x in basis:
        assert linalg.mat_mul(a, x) == linalg.mat_mul(x, b)
    # independent count: nullity of the 4x4 system
    eqs = sympy.zeros(4, 4)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                eqs[i * 2 + j, k * 2 + j] += a[i][k]
                eqs[i * 2 + j, i * 2 + k] -= b[k][j]
    assert len(basis) == 4 - eqs.rank()


def test_intertwiner_lattice_contains_case7_t():
    basis = linalg.intertwiner_lattice(matrix("E1_12"), matrix("E1_8"))
    flat = [[x for r in m for x in r] for m in basis]
    t = [0, 0, 1, -1, 0, 1, 2, 1, -1]
    assert linalg.hermite_contains(linalg.hermite_rows(flat, 9), t)


def test_mat_pow():
    f = [[1, 1], [1, 0]]
    assert linalg.mat_pow(f, 2) == [[2, 1], [1, 1]]
    assert linalg.mat_pow(f, 0) == linalg.identity(2)
