from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from shiftequiv import algebraic as alg, linalg, poly
from shiftequiv.catalog import matrix, small_entries

from conftest import X, to_sympy


def test_sqrt2_roots():
    roots = alg.isolate_real_roots((-2, 0, 1))
    assert [alg.round_decimal(r, 5) for r in roots] == ["-1.41421", "1.41421"]


def test_single_real_root_in_interval():
    roots = alg.isolate_real_roots((-1, 0, -1, 1))
    assert len(roots) == 1
    r = roots[0].refine_to(Fraction(1, 100))
    assert Fraction(14, 10) < r.hi and r.lo < Fraction(15, 10)
    assert alg.sign_at_root((-1, 1), roots[0]) == 1


def test_largest_root_e1_8():
    lam = alg.largest_real_root((1, -1, -2, 1))
    assert len(alg.isolate_real_roots((1, -1, -2, 1))) == 3
    assert alg.round_decimal(lam, 5) == "2.24698"


def test_sign_examples():
    sqrt2 = alg.isolate_real_roots((-2, 0, 1))[1]
    assert alg.sign_at_root((-2, 0, 1), sqrt2) == 0
    phi = alg.largest_real_root((-1, -1, 1))
    assert alg.sign_at_root((2, -1), phi) == 1


polys = st.lists(st.integers(-5, 5), min_size=2, max_size=6).map(poly.normalize).filter(lambda p: len(p) >= 2)


@given(polys)
def test_isolation_against_sympy(p):
    roots = alg.isolate_real_roots(p)
    ref = sorted(set(sympy.real_roots(to_sympy(p).as_expr(), X)))
    assert len(roots) == len(ref)
    for a, r in zip(roots, ref):
        assert a.lo < r < a.hi
        assert poly.count_roots(poly.sturm_sequence(a.minpoly), a.lo, a.hi) == 1


@given(polys, st.integers(0, 6))
def test_rounding_against_sympy(p, digits):
    for a in alg.isolate_real_roots(p):
        ref = sympy.real_roots(to_sympy(a.minpoly).as_expr(), X)
        exact = next(r for r in ref if a.lo < r < a.hi)
        # exact half-up rounding of the sympy root
        scaled = sympy.Rational(10) ** digits * abs(exact)
        n = int(sympy.floor(scaled + sympy.Rational(1, 2)))
        whole, frac = divmod(n, 10**digits)
        want = f"{whole}.{frac:0{digits}d}" if digits else str(whole)
        if exact < 0 and n:
            want = "-" + want
        assert alg.round_decimal(a, digits) == want


def _sympy_sign(q, minpoly, root):
    # q(root) = 0 iff the irreducible factor vanishing at root divides q;
    # otherwise the sign comes from a 60-digit evaluation
    for f, _ in sympy.factor_list(to_sympy(minpoly).as_expr(), X)[1]:
        if abs(sympy.N(f.subs(X, root), 60)) < sympy.Float("1e-45"):
            if sympy.rem(to_sympy(q).as_expr(), f, X) == 0:
                return 0
            break
    return int(sympy.sign(sympy.N(to_sympy(q).as_expr().subs(X, root), 60)))


@given(polys, polys)
def test_sign_at_root_against_sympy(p, q):
    for a in alg.isolate_real_roots(p):
        ref = sympy.real_roots(to_sympy(a.minpoly).as_expr(), X)
        exact = next(r for r in ref if a.lo < r < a.hi)
        assert alg.sign_at_root(q, a) == _sympy_sign(q, a.minpoly, exact)


def test_equality_between_representations():
    # the golden ratio as a root of x^2 - x - 1 and of (x^2 - x - 1)(x - 3)
    a = alg.largest_real_root((-1, -1, 1))
    b = alg.isolate_real_roots(poly.mul((-1, -1, 1), (-3, 1)))[1]
    assert alg.algebraic_equal(a, b)
    assert not alg.algebraic_equal(a, alg.isolate_real_roots((-1, -1, 1))[0])
    assert not alg.algebraic_equal(a, alg.AlgebraicReal.rational(2))


def test_rational_roots_are_exact():
    r = alg.isolate_real_roots((-2, 1))[0]
    assert r.exact == 2
    assert alg.round_decimal(r, 5) == "2.00000"
    assert alg.isolate_real_roots((-2, 0, 1))[1].exact is None


def test_multiplicity():
    p = poly.mul(poly.power((1, 1), 2), (-2, 1))  # (x+1)^2 (x-2)
    roots = alg.real_roots_with_multiplicity(p)
    assert [(alg.round_decimal(a, 0), m) for a, m in roots] == [("-1", 2), ("2", 1)]


def test_same_nonzero_spectrum():
    # R S and S R share their nonzero spectrum
    r = [[1, 0], [1, 1], [1, 0]]
    s = [[1, 1, 0], [0, 0, 1]]
    assert alg.same_nonzero_spectrum(linalg.mat_mul(r, s), linalg.mat_mul(s, r))
    assert not alg.same_nonzero_spectrum([[2]], [[3]])


def test_pf_data_fibonacci():
    d = alg.pf_data([[1, 1], [1, 0]])
    assert d.lam.minpoly == (-1, -1, 1)
    x = float(d.lam)
    z = d.z_float()
    assert abs(z[0] / z[1] - x) < 1e-12


def test_pf_data_examples():
    d = alg.pf_data([[2]])
    assert d.lam.exact == 2 and len(d.z) == 1
    d = alg.pf_data(matrix("E6_1"))
    assert d.lam.exact == 2
    z = d.z_float()
    assert max(z) - min(z) < 1e-12


def test_pf_requires_irreducible():
    with pytest.raises(ValueError):
        alg.pf_data([[1, 1], [0, 1]])


@pytest.mark.parametrize("entry", small_entries(), ids=lambda e: e.id)
def test_perron_root_against_numeric(entry):
    a = entry.matrix
    lam = alg.perron_root(a)
    ref = max(abs(complex(v)) for v in sympy.Matrix(a).eigenvals(multiple=True))
    assert abs(float(lam) - ref) < 1e-9


@pytest.mark.parametrize("entry", [e for e in small_entries()], ids=lambda e: e.id)
def test_pf_eigenvector_is_positive_and_exact(entry):
    from shiftequiv.graph import is_irreducible

    a = entry.matrix
    if not is_irreducible(a):
        return
    d = alg.pf_data(a)
    z = d.z_float()
    assert all(x > 0 for x in z)
    lam = float(d.lam)
    for i in range(len(a)):
        assert abs(sum(a[i][j] * z[j] for j in range(len(a))) - lam * z[i]) < 1e-9 * max(z)


def test_pf_decimals():
    assert alg.pf_eigenvalue_decimal(matrix("E1_8")) == "2.24698"
    assert alg.pf_eigenvalue_decimal([[2]]) == "2.00000"
    assert alg.pf_eigenvalue_decimal(matrix("E1_1")) == "1.46557"
