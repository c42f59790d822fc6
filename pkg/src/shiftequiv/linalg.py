"""Exact integer and rational matrix routines.

Matrices are lists of rows; entries are Python ints (unbounded) or
``Fraction``.  Nothing here touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import poly


def as_matrix(rows):
    m = [list(r) for r in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def is_square(a):
    r, c = shape(a)
    return r == c


def freeze(a):
    return tuple(tuple(r) for r in a)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in r] for r in a]


def mat_mul(a, b):
    if shape(a)[1] != len(b):
        raise ValueError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def mat_pow(a, n):
    if n < 0:
        raise ValueError("negative exponent")
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def vec_mat(v, a):
    """Row vector times matrix."""
    if len(v) != len(a):
        raise ValueError("dimension mismatch")
    cols = shape(a)[1]
    return [sum(v[i] * a[i][j] for i in range(len(v)) if v[i]) for j in range(cols)]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(r, v)) for r in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def is_nonneg(a):
    return all(x >= 0 for r in a for x in r)


def det(a):
    """Determinant; Bareiss elimination for integers, Gauss for rationals."""
    n = len(a)
    if n == 0:
        return 1
    if any(isinstance(x, Fraction) for r in a for x in r):
        return _det_rational(a)
    m = [list(r) for r in a]
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sgn = -sgn
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sgn * m[n - 1][n - 1]


def _det_rational(a):
    m = [[Fraction(x) for x in r] for r in a]
    n = len(m)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            result = -result
        result *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return result


def minor(a, i, j):
    return [r[:j] + r[j + 1:] for idx, r in enumerate(a) if idx != i]


def adjugate(a):
    n = len(a)
    if n == 1:
        return [[1]]
    return [[(-1) ** (i + j) * det(minor(a, j, i)) for j in range(n)] for i in range(n)]


def inverse(a):
    """Rational inverse; raises ZeroDivisionError when singular."""
    d = det(a)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    return [[Fraction(x, 1) / d for x in r] for r in adjugate(a)]


def rank(a):
    m = [[Fraction(x) for x in r] for r in a]
    rows, cols = shape(m)
    rk = 0
    for c in range(cols):
        piv = next((i for i in range(rk, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(rows):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


def char_poly(a):
    """det(xI - A) by the Berkowitz recurrence, constant term first."""
    n = len(a)
    if n == 0:
        return poly.ONE
    coeffs = [1, -a[0][0]]  # highest degree first
    for k in range(1, n):
        sub = [row[:k] for row in a[:k]]
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        t = [1, -a[k][k]]
        w = col
        for _ in range(k):
            t.append(-dot(row, w))
            w = mat_vec(sub, w)
        new = []
        for i in range(k + 2):
            new.append(sum(t[i - j] * coeffs[j] for j in range(len(coeffs)) if 0 <= i - j))
        coeffs = new
    return poly.normalize(reversed(coeffs))


def adjugate_poly(a):
    """adj(xI - A) as a list of matrices B_0..B_{n-1}: adj = sum B_i x^(n-1-i)."""
    n = len(a)
    cp = char_poly(a)
    c = list(reversed(cp))  # c[0] = 1, c[i] = coefficient of x^(n-i)
    mats = [identity(n)]
    for i in range(1, n):
        nxt = mat_mul(a, mats[-1])
        for j in range(n):
            nxt[j][j] += c[i]
        mats.append(nxt)
    return mats


def adjugate_column_polys(a, col):
    """Column ``col`` of adj(xI - A) as a list of polynomials in x."""
    n = len(a)
    mats = adjugate_poly(a)
    out = []
    for i in range(n):
        out.append(poly.normalize(mats[n - 1 - d][i][col] for d in range(n)))
    return out


@dataclass(frozen=True)
class SmithForm:
    U: tuple
    D: tuple
    V: tuple
    invariant_factors: tuple

    @property
    def rank(self):
        return sum(1 for d in self.invariant_factors if d != 0)


def smith_normal_form(a):
    """U*A*V = D with D diagonal, d_i | d_{i+1}, U and V unimodular."""
    rows, cols = shape(a)
    d = [list(r) for r in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in d:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = d[t][t]
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, rows)) or any(d[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    factors = tuple(d[i][i] for i in range(min(rows, cols)))
    return SmithForm(freeze(u), freeze(d), freeze(v), factors)


def hermite_rows(vectors, width=None):
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Returns the nonzero basis rows in echelon order with positive pivots and
    entries above each pivot reduced into [0, pivot).
    """
    pool = [list(r) for r in vectors if any(r)]
    if width is None:
        width = len(vectors[0]) if vectors else 0
    basis = []
    pivots = []
    for c in range(width):
        active = [r for r in pool if r[c]]
        rest = [r for r in pool if not r[c]]
        while len(active) > 1:
            active.sort(key=lambda r: (abs(r[c]), r))
            head = active[0]
            nxt = [head]
            for r in active[1:]:
                q = r[c] // head[c]
                r = [x - q * y for x, y in zip(r, head)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        if active:
            row = active[0]
            if row[c] < 0:
                row = [-x for x in row]
            for k, prev in enumerate(basis):
                q = prev[c] // row[c]
                if q:
                    basis[k] = [x - q * y for x, y in zip(prev, row)]
            basis.append(row)
            pivots.append(c)
        pool = rest
    return basis


def hermite_contains(basis, vector):
    """Is the integer vector in the lattice with the given Hermite basis?"""
    v = list(vector)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if any(v[:c]):
            return False
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def common_denominator(vectors):
    den = 1
    for vec in vectors:
        for x in vec:
            x = Fraction(x)
            den = den * x.denominator // gcd(den, x.denominator)
    return den


def lattice_contains(generators, vector):
    """Membership of a rational vector in the Z-span of rational generators."""
    den = common_denominator(list(generators) + [vector])
    scaled = [[int(Fraction(x) * den) for x in g] for g in generators]
    target = [int(Fraction(x) * den) for x in vector]
    return hermite_contains(hermite_rows(scaled, len(vector)), target)


def integer_kernel(m, ncols=None):
    """Basis of {x in Z^n : M x = 0}, as a list of integer vectors."""
    rows, cols = shape(m)
    if ncols is not None:
        cols = ncols
    if rows == 0:
        return [[int(i == j) for j in range(cols)] for i in range(cols)]
    snf = smith_normal_form(m)
    rk = snf.rank
    v = snf.V
    return [[v[i][j] for i in range(cols)] for j in range(rk, cols)]


@dataclass(frozen=True)
class IntegerSolution:
    rational: bool  # solvable over Q
    particular: tuple  # an integer solution, or None
    kernel: tuple  # integer kernel basis


def solve_integer(m, b):
    """All integer solutions of M x = b, as particular + kernel span."""
    rows, cols = shape(m)
    snf = smith_normal_form(m)
    ub = mat_vec(snf.U, b)
    rk = snf.rank
    kernel = tuple(tuple(snf.V[i][j] for i in range(cols)) for j in range(rk, cols))
    if any(ub[i] for i in range(rk, rows)):
        return IntegerSolution(False, None, kernel)
    y = [0] * cols
    for i in range(rk):
        dii = snf.D[i][i]
        if ub[i] % dii:
            return IntegerSolution(True, None, kernel)
        y[i] = ub[i] // dii
    x = tuple(mat_vec(snf.V, y))
    return IntegerSolution(True, x, kernel)


def intertwiner_lattice(a, b):
    """Integral basis of {X : A X = X B} for square A (r x r), B (s x s)."""
    r, s = len(a), len(b)
    # unknown X[i][j] at coordinate i*s + j
    eqs = []
    for i, j in product(range(r), range(s)):
        row = [0] * (r * s)
        for k in range(r):
            row[k * s + j] += a[i][k]
        for k in range(s):
            row[i * s + k] -= b[k][j]
        eqs.append(row)
    basis = integer_kernel(eqs, r * s)
    basis = hermite_rows(basis, r * s)
    mats = []
    for vec in basis:
        x = [vec[i * s:(i + 1) * s] for i in range(r)]
        if mat_mul(a, x) != mat_mul(x, b):
            raise AssertionError("intertwiner basis element fails A X = X B")
        mats.append(x)
    return mats


def entries_bounded(a, bound):
    return all(0 <= x <= bound for r in a for x in r)


def max_entry(a):
    return max((x for r in a for x in r), default=0)
