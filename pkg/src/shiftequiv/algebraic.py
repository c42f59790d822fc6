"""Real algebraic numbers by isolating intervals, and Perron-Frobenius data.

An ``AlgebraicReal`` is a square-free integer polynomial together with an
open rational interval (lo, hi) that contains exactly one of its real roots.
The endpoints are never roots, so the polynomial changes sign across the
interval.  All decisions (signs, equality, rounding) are exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg, poly


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


@dataclass(frozen=True)
class AlgebraicReal:
    minpoly: tuple
    lo: Fraction
    hi: Fraction
    _sturm: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self._sturm is None:
            object.__setattr__(self, "_sturm", tuple(poly.sturm_sequence(self.minpoly)))

    @classmethod
    def rational(cls, q):
        q = Fraction(q)
        p = poly.primitive((-q.numerator, q.denominator))
        return cls(p, q - 1, q + 1)

    def refine(self):
        """Halve the isolating interval."""
        p = self.minpoly
        mid = (self.lo + self.hi) / 2
        v = poly.evaluate(p, mid)
        if v == 0:
            lo, hi = (self.lo + mid) / 2, (mid + self.hi) / 2
        elif poly.sign(v) == poly.sign(poly.evaluate(p, self.lo)):
            lo, hi = mid, self.hi
        else:
            lo, hi = self.lo, mid
        return AlgebraicReal(p, lo, hi, self._sturm)

    def refine_to(self, width):
        a = self
        while a.hi - a.lo > width:
            a = a.refine()
        return a

    @cached_property
    def exact(self):
        """The root as a Fraction when it is rational, else None."""
        p = self.minpoly
        if p[0] == 0:
            return Fraction(0) if self.lo < 0 < self.hi else None
        for num in _divisors(p[0]):
            for den in _divisors(p[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if self.lo < cand < self.hi and poly.evaluate(p, cand) == 0:
                        return cand
        return None

    def sign_of(self, q):
        return sign_at_root(q, self)

    def same_as(self, other):
        return algebraic_equal(self, other)

    def decimal(self, digits=5):
        return round_decimal(self, digits)

    def __float__(self):
        a = self.refine_to(Fraction(1, 10**18))
        return float((a.lo + a.hi) / 2)

    def to_json(self):
        return {"minpoly": list(self.minpoly), "lo": str(self.lo), "hi": str(self.hi)}


def isolate_real_roots(p):
    """One AlgebraicReal per distinct real root of p, sorted ascending."""
    p = poly.normalize(p)
    if not p:
        raise ValueError("zero polynomial has no isolated roots")
    sq = poly.squarefree(p)
    if poly.degree(sq) < 1:
        return []
    seq = poly.sturm_sequence(sq)
    bound = poly.root_bound(sq)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = poly.count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(sq, lo, hi, tuple(seq)))
            continue
        mid = (lo + hi) / 2
        step = (hi - lo) / 7
        while poly.evaluate(sq, mid) == 0:
            # keep endpoints away from roots
            mid += step
            step /= 3
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda a: a.lo)
    return out


def largest_real_root(p):
    roots = isolate_real_roots(p)
    if not roots:
        raise ValueError("polynomial has no real roots")
    return roots[-1]


def sign_at_root(q, alpha):
    """Exact sign of q(alpha) as -1, 0 or +1."""
    q = poly.normalize(q)
    if not q:
        return 0
    if poly.degree(q) == 0:
        return poly.sign(q[0])
    g = poly.poly_gcd(q, alpha.minpoly)
    if poly.degree(g) >= 1:
        if poly.count_roots(poly.sturm_sequence(g), alpha.lo, alpha.hi) > 0:
            return 0
    qs = poly.squarefree(q)
    qseq = poly.sturm_sequence(qs)
    a = alpha
    while True:
        if poly.evaluate(qs, a.lo) != 0 and poly.count_roots(qseq, a.lo, a.hi) == 0:
            return poly.sign(poly.evaluate(q, a.lo))
        a = a.refine()


def algebraic_equal(a, b):
    if a.minpoly == b.minpoly and a.lo == b.lo and a.hi == b.hi:
        return True
    g = poly.poly_gcd(a.minpoly, b.minpoly)
    if poly.degree(g) < 1:
        return False
    if poly.count_roots(poly.sturm_sequence(g), a.lo, a.hi) == 0:
        return False
    # a is a root of g, hence of b.minpoly; it is b iff it lies in b's interval
    x = a
    while True:
        if x.hi <= b.lo or x.lo >= b.hi:
            return False
        if b.lo <= x.lo and x.hi <= b.hi:
            return True
        x = x.refine()


def multiplicity(p, alpha):
    """Multiplicity of alpha as a root of p (0 if not a root)."""
    k = 0
    q = poly.normalize(p)
    while q and sign_at_root(q, alpha) == 0:
        k += 1
        q = poly.derivative(q)
    return k


def real_roots_with_multiplicity(p):
    return [(a, multiplicity(p, a)) for a in isolate_real_roots(p)]


def _round_half_up(x, digits):
    scale = 10**digits
    mag = abs(x) * scale
    n = int(mag + Fraction(1, 2))
    whole, frac = divmod(n, scale)
    sign = "-" if x < 0 and n else ""
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def round_decimal(alpha, digits=5):
    """Correctly rounded decimal rendering of alpha (half-up)."""
    if alpha.exact is not None:
        return _round_half_up(alpha.exact, digits)
    a = alpha
    while True:
        lo_s = _round_half_up(a.lo, digits)
        if lo_s == _round_half_up(a.hi, digits):
            return lo_s
        a = a.refine()


def nonzero_charpoly_part(a):
    """char_poly with every factor x removed: encodes the nonzero spectrum."""
    return poly.strip_zero_roots(linalg.char_poly(a))[0]


def same_nonzero_spectrum(a, b):
    """Compare nonzero spectra of two square matrices two independent ways.

    The polynomial route compares char polys with the zero roots removed
    (this covers complex eigenvalues).  The real route pairs up isolated
    nonzero real roots with multiplicities using AlgebraicReal equality.
    The two must agree.
    """
    pa, pb = nonzero_charpoly_part(a), nonzero_charpoly_part(b)
    by_poly = pa == pb
    ra = real_roots_with_multiplicity(pa) if poly.degree(pa) > 0 else []
    rb = real_roots_with_multiplicity(pb) if poly.degree(pb) > 0 else []
    by_roots = len(ra) == len(rb) and all(
        m1 == m2 and algebraic_equal(x, y) for (x, m1), (y, m2) in zip(ra, rb)
    )
    if by_poly and not by_roots:
        raise AssertionError("nonzero spectrum routes disagree")
    return by_poly and by_roots


@dataclass(frozen=True)
class PFData:
    lam: AlgebraicReal
    z: tuple  # entries are polynomials in lambda reduced modulo lam.minpoly
    column: int

    def z_float(self):
        x = float(self.lam)
        return [float(poly.evaluate(e, Fraction(x))) for e in self.z]

    def dot_sign(self, u):
        """Exact sign of u . z for a rational vector u."""
        total = poly.ZERO
        for ui, zi in zip(u, self.z):
            if ui:
                total = poly.add(total, poly.scale(zi, Fraction(ui)))
        den = linalg.common_denominator([total]) if total else 1
        return sign_at_root(poly.normalize(int(c * den) for c in total), self.lam)


def pf_data(a):
    """Perron eigenvalue and a positive right eigenvector in Z[lambda]."""
    from .graph import is_irreducible

    if not is_irreducible(a):
        raise ValueError("Perron-Frobenius data requires an irreducible matrix")
    cp = linalg.char_poly(a)
    lam = largest_real_root(cp)
    mp = lam.minpoly
    n = len(a)
    for col in range(n):
        entries = [poly.rem(e, mp) for e in linalg.adjugate_column_polys(a, col)]
        signs = [sign_at_root(e, lam) for e in entries]
        if 0 in signs or len(set(signs)) != 1:
            continue
        if signs[0] < 0:
            entries = [poly.neg(e) for e in entries]
        entries = tuple(_integral(e) for e in entries)
        # A z = lambda z, modulo the minimal polynomial
        for i in range(n):
            lhs = poly.ZERO
            for j in range(n):
                if a[i][j]:
                    lhs = poly.add(lhs, poly.scale(entries[j], a[i][j]))
            diff = poly.sub(lhs, poly.mul(poly.X, entries[i]))
            if poly.rem(diff, mp):
                raise AssertionError("eigenvector check failed")
        return PFData(lam, entries, col)
    raise AssertionError("no adjugate column is sign-definite at the Perron root")


def _integral(p):
    return tuple(int(c) if Fraction(c).denominator == 1 else c for c in p)


def perron_root(a):
    """Spectral radius of a nonnegative matrix, as its largest real eigenvalue.

    Unlike ``pf_data`` this accepts reducible matrices (graphs with sources),
    where the spectral radius is still an eigenvalue.
    """
    if not linalg.is_nonneg(a):
        raise ValueError("Perron root is defined here for nonnegative matrices")
    lam = largest_real_root(linalg.char_poly(a))
    if sign_at_root((0, 1), lam) <= 0:
        raise ValueError("matrix has spectral radius 0")
    return lam


def pf_eigenvalue_decimal(a, digits=5):
    return round_decimal(perron_root(a), digits)
