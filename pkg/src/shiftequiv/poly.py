"""Dense univariate polynomials over Z and Q.

A polynomial is a tuple of coefficients, constant term first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Coefficients are
``int`` or ``Fraction``; every routine here is exact.
"""

from fractions import Fraction
from math import gcd

ZERO = ()
ONE = (1,)
X = (0, 1)


def normalize(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p):
    return len(p) - 1


def lead(p):
    return p[-1]


def add(p, q):
    n = max(len(p), len(q))
    return normalize(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    return normalize(c * a for a in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def power(p, n):
    result = ONE
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def divmod_poly(p, q):
    """Quotient and remainder over Q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p]
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lq = Fraction(q[-1])
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lq
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return _demote(normalize(quo)), _demote(normalize(rem))


def rem(p, q):
    return divmod_poly(p, q)[1]


def _demote(p):
    return tuple(int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in p)


def content(p):
    """gcd of the numerators over lcm of denominators, positive."""
    num = 0
    den = 1
    for c in p:
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(num, den) if num else Fraction(0)


def primitive(p):
    """Integer primitive part with positive leading coefficient."""
    if not p:
        return ZERO
    c = content(p)
    out = tuple(int(Fraction(a) / c) for a in p)
    if out[-1] < 0:
        out = neg(out)
    return out


def monic(p):
    return _demote(tuple(Fraction(c) / Fraction(p[-1]) for c in p))


def poly_gcd(p, q):
    """Greatest common divisor, returned as a primitive integer polynomial."""
    p, q = normalize(p), normalize(q)
    while q:
        p, q = q, rem(p, q)
    if not p:
        return ZERO
    return primitive(p)


def derivative(p):
    return normalize(i * c for i, c in enumerate(p) if i)


def squarefree(p):
    """Square-free part of ``p`` as a primitive integer polynomial."""
    p = primitive(p)
    if degree(p) <= 0:
        return p
    g = poly_gcd(p, derivative(p))
    return primitive(divmod_poly(p, g)[0])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign(x):
    return (x > 0) - (x < 0)


def compose_linear(p, a, b):
    """p(a*x + b)."""
    out = ZERO
    lin = normalize((b, a))
    for c in reversed(p):
        out = add(mul(out, lin), (c,) if c else ZERO)
    return out


def sturm_sequence(p):
    seq = [p, derivative(p)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return seq


def sign_variations(seq, x):
    signs = [sign(evaluate(s, x)) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, lo, hi):
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p):
    """Cauchy bound: every real root has absolute value below the result."""
    lc = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lc for c in p[:-1]), default=Fraction(0))


def strip_zero_roots(p):
    """Divide out the largest power of x; returns (quotient, multiplicity)."""
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return tuple(p[k:]), k


def to_string(p, var="x"):
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else f"{mag}*"
            body = coef + (var if i == 1 else f"{var}^{i}")
        sgn = "-" if c < 0 else "+"
        terms.append((sgn, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sgn, body in terms[1:]:
        out += f" {sgn} {body}"
    return out
