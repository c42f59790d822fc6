"""Dimension groups, the positive cone, talented monoids and K_0.

An element of the dimension group G_A is a class [v, k] with v an integer
row vector and k >= 0 a stage; [v, k] = [vA, k + 1].  Addition brings both
classes to a common stage, and the shift acts by right multiplication.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .algebraic import pf_data, pf_eigenvalue_decimal  # noqa: F401  (re-export)
from .graph import is_primitive

DEFAULT_POWER_BOUND = 64


class MatrixMismatch(ValueError):
    pass


class _Context:
    """Per-matrix data reused across many dimension-group operations."""

    def __init__(self, a):
        self.a = a
        self.r = len(a)
        self.det = linalg.det([list(x) for x in a])
        self.powers = [tuple(tuple(int(i == j) for j in range(self.r)) for i in range(self.r)), a]
        if self.det:
            self.adj = linalg.adjugate([list(x) for x in a])
            self.snf = None
        else:
            self.adj = None
            self.snf = linalg.smith_normal_form(linalg.transpose([list(x) for x in a]))

    def power(self, p):
        while len(self.powers) <= p:
            self.powers.append(linalg.freeze(linalg.mat_mul(self.powers[-1], self.a)))
        return self.powers[p]

    def apply(self, v, p=1):
        if p == 0:
            return tuple(v)
        m = self.power(p)
        r = self.r
        return tuple(sum(v[i] * m[i][j] for i in range(r)) for j in range(r))

    def preimage(self, v):
        """An integer w with w A = v, or None."""
        r = self.r
        if self.det:
            adj, d = self.adj, self.det
            w = []
            for j in range(r):
                s = sum(v[i] * adj[i][j] for i in range(r))
                if s % d:
                    return None
                w.append(s // d)
            return tuple(w)
        snf = self.snf
        c = [sum(snf.U[i][j] * v[j] for j in range(r)) for i in range(r)]
        y = [0] * r
        for i in range(r):
            dii = snf.D[i][i]
            if dii == 0:
                if c[i]:
                    return None
            elif c[i] % dii:
                return None
            else:
                y[i] = c[i] // dii
        return tuple(sum(snf.V[i][j] * y[j] for j in range(r)) for i in range(r))


@lru_cache(maxsize=512)
def _context(a):
    return _Context(a)


def context(a):
    return _context(linalg.freeze(a))


@dataclass(frozen=True)
class DimElement:
    matrix: tuple
    v: tuple
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("stage must be nonnegative")
        if len(self.v) != len(self.matrix):
            raise ValueError("vector length does not match matrix size")

    def to_json(self, matrix_id=None):
        return {"matrix_id": matrix_id, "v": list(self.v), "k": self.k}


def canonical(a):
    """Pull back through A while the vector has an integer preimage."""
    ctx = _context(a.matrix)
    v, k = a.v, a.k
    while k > 0:
        w = ctx.preimage(v)
        if w is None:
            break
        v, k = w, k - 1
    return DimElement(a.matrix, v, k)


def dim_element(a, v, k=0, canonicalize=True):
    x = DimElement(linalg.freeze(a), tuple(v), k)
    return canonical(x) if canonicalize else x


def _check(a, b):
    if a.matrix != b.matrix:
        raise MatrixMismatch("dimension-group elements over different matrices")


def dg_add(a, b):
    _check(a, b)
    ctx = _context(a.matrix)
    va = ctx.apply(a.v, b.k)
    vb = ctx.apply(b.v, a.k)
    return canonical(DimElement(a.matrix, tuple(x + y for x, y in zip(va, vb)), a.k + b.k))


def dg_neg(a):
    return DimElement(a.matrix, tuple(-x for x in a.v), a.k)


def dg_sub(a, b):
    return dg_add(a, dg_neg(b))


def dg_eq(a, b):
    _check(a, b)
    ctx = _context(a.matrix)
    m = max(a.k, b.k) + ctx.r
    return ctx.apply(a.v, m - a.k) == ctx.apply(b.v, m - b.k)


def dg_is_zero(a):
    ctx = _context(a.matrix)
    return not any(ctx.apply(a.v, ctx.r))


def dg_shift(a, n):
    """theta_A^n: [v, k] -> [vA^n, k] for n >= 0, [v, k - n] for n < 0."""
    if n >= 0:
        ctx = _context(a.matrix)
        return canonical(DimElement(a.matrix, ctx.apply(a.v, n), a.k))
    return canonical(DimElement(a.matrix, a.v, a.k - n))


def order_unit(a):
    a = linalg.freeze(a)
    return DimElement(a, (1,) * len(a), 0)


_INT64_SAFE = 2**62


def _power_stack(ctx, top):
    """(A^0, ..., A^top) as an int64 or object array, plus the largest |entry|."""
    cache = ctx.__dict__.setdefault("_stacks", {})
    if top not in cache:
        powers = [ctx.power(q) for q in range(top + 1)]
        peak = max(abs(x) for m in powers for row in m for x in row)
        dtype = np.int64 if peak < _INT64_SAFE else object
        cache[top] = (np.array(powers, dtype=dtype), peak)
    return cache[top]


def _fits(v, peak, r):
    if v.dtype == object:
        return False
    big = max(int(v.max()), -int(v.min())) if v.size else 0
    return r * big * peak < _INT64_SAFE


def _times_power(v, ctx, p):
    """v A^p for an (n, r) array v, in int64 when that cannot overflow."""
    if p == 0:
        return v
    m = ctx.power(p)
    peak = max(abs(x) for row in m for x in row)
    if _fits(v, peak, ctx.r):
        return v @ np.array(m, dtype=np.int64)
    return v.astype(object) @ np.array(m, dtype=object)


class DimBatch:
    """Many elements [v_i, k_i] of one G_A, stored as integer arrays.

    Stages are never pulled back; equality lifts both sides to a common
    stage.  Products that might leave int64 switch to Python integers, so
    every operation stays exact.
    """

    def __init__(self, a, v, k):
        self.matrix = linalg.freeze(a)
        self.ctx = _context(self.matrix)
        self.v = np.asarray(v)
        if self.v.dtype != object:
            self.v = self.v.astype(np.int64)
        self.k = np.asarray(k, dtype=np.int64)
        if self.v.shape != (len(self.k), self.ctx.r):
            raise ValueError("batch shapes do not match the matrix")
        if len(self.k) and self.k.min() < 0:
            raise ValueError("stage must be nonnegative")

    def __len__(self):
        return len(self.k)

    def lift(self, target):
        """Vectors representing the same classes at stages `target` (>= k)."""
        p = target - self.k
        if not len(p):
            return self.v
        if p.min() < 0:
            raise ValueError("cannot lift below the current stage")
        stack, peak = _power_stack(self.ctx, int(p.max()))
        if _fits(self.v, peak, self.ctx.r):
            return np.einsum("ni,nij->nj", self.v, stack[p])
        v, stack = self.v.astype(object), stack.astype(object)
        return np.array([v[n] @ stack[q] for n, q in enumerate(p)], dtype=object).reshape(v.shape)

    def _check(self, other):
        if self.matrix != other.matrix or len(self) != len(other):
            raise MatrixMismatch("batches over different matrices or of different lengths")

    def __add__(self, other):
        self._check(other)
        t = np.maximum(self.k, other.k)
        return DimBatch(self.matrix, self.lift(t) + other.lift(t), t)

    def __neg__(self):
        return DimBatch(self.matrix, -self.v, self.k)

    def __sub__(self, other):
        return self + (-other)

    def shift(self, n):
        if n >= 0:
            return DimBatch(self.matrix, _times_power(self.v, self.ctx, n), self.k)
        return DimBatch(self.matrix, self.v, self.k - n)

    def eq(self, other):
        """Row-wise equality of classes, as a boolean array."""
        self._check(other)
        t = np.maximum(self.k, other.k) + self.ctx.r
        return (self.lift(t) == other.lift(t)).all(axis=1)

    def is_zero(self):
        return ~self.lift(self.k + self.ctx.r).astype(bool).any(axis=1)

    def element(self, i):
        return dim_element(self.matrix, [int(x) for x in self.v[i]], int(self.k[i]))

    @classmethod
    def from_elements(cls, a, xs):
        r = len(a)
        v = np.array([x.v for x in xs], dtype=object).reshape(len(xs), r) if xs else np.zeros((0, r), np.int64)
        if xs and max(abs(int(c)) for x in xs for c in x.v) < _INT64_SAFE:
            v = v.astype(np.int64)
        return cls(a, v, [x.k for x in xs])


def embed_invertible(a):
    """[v, k] -> v A^{-k} as a rational vector."""
    ctx = _context(a.matrix)
    if not ctx.det:
        raise ValueError("embedding requires det(A) != 0")
    v = list(a.v)
    for _ in range(a.k):
        v = [Fraction(sum(v[i] * ctx.adj[i][j] for i in range(ctx.r)), ctx.det) for j in range(ctx.r)]
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class DeltaMembership:
    contains: bool
    k: int  # witnessing power when contains, else orbit length explored


def delta_contains(a, u):
    """Decide whether u A^k is integral for some k >= 0."""
    a = linalg.freeze(a)
    ctx = _context(a)
    if not ctx.det:
        raise ValueError("delta_contains requires det(A) != 0")
    x = tuple(Fraction(c) for c in u)
    seen = set()
    k = 0
    while True:
        if all(c.denominator == 1 for c in x):
            return DeltaMembership(True, k)
        frac = tuple(c - (c.numerator // c.denominator) for c in x)
        if frac in seen:
            return DeltaMembership(False, k)
        seen.add(frac)
        x = tuple(sum(frac[i] * a[i][j] for i in range(ctx.r)) for j in range(ctx.r))
        k += 1


@dataclass(frozen=True)
class DeltaClaim:
    """Delta_A = sum of Z[1/d] * w over the scaled vectors, plus span(free_part)."""

    d: int
    scaled: tuple
    free_part: tuple = ()

    @classmethod
    def from_json(cls, data):
        w = data["w"]
        scaled = (tuple(w),) if w and not isinstance(w[0], (list, tuple)) else tuple(map(tuple, w))
        return cls(int(data["d"]), scaled, tuple(map(tuple, data.get("free_part", []))))

    def to_json(self):
        w = list(self.scaled[0]) if len(self.scaled) == 1 else [list(x) for x in self.scaled]
        return {"d": self.d, "w": w, "free_part": [list(x) for x in self.free_part]}

    def level(self, k):
        scale = Fraction(1, self.d**k)
        return [tuple(scale * x for x in w) for w in self.scaled] + [
            tuple(Fraction(x) for x in f) for f in self.free_part
        ]

    def render(self):
        r = len(self.scaled[0])
        ring = f"Z[1/{self.d}]"
        standard = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        if not self.free_part and sorted(self.scaled) == sorted(standard):
            return ring if r == 1 else f"({ring})^{r}"
        parts = [f"{ring}[{' '.join(map(str, w))}]" for w in self.scaled]
        if self.free_part:
            s = len(self.free_part)
            parts.append("0×Z" if s == 1 else f"0×Z^{s}")
        return " ⊕ ".join(parts)


@dataclass(frozen=True)
class DeltaLevel:
    k: int
    lattice_in_claim: bool  # Z^r A^{-k} inside the level-k truncation
    claim_in_delta: bool  # every level-k generator lies in Delta_A
    witness_power: int  # m with (level-k truncation) A^m integral


@dataclass(frozen=True)
class DeltaReport:
    ok: bool
    levels: tuple
    first_failure: int  # None on success

    def to_json(self):
        return {
            "ok": self.ok,
            "first_failure": self.first_failure,
            "levels": [vars(lv) for lv in self.levels],
        }


def delta_claim_verify(a, claim, levels=8):
    """Check both inclusions between Z^r A^{-k} and the claim, level by level.

    Level k of the claim is C_k = span(w / d^k) + span(free_part).  The
    union of the Z^r A^{-k} is Delta_A and the union of the C_k is the
    claimed group, so agreement of the two directions at every level up to
    the bound certifies the claim up to that level.
    """
    a = linalg.freeze(a)
    ctx = _context(a)
    if not ctx.det:
        raise ValueError("delta claims require det(A) != 0")
    gens = list(claim.scaled) + list(claim.free_part)
    if linalg.rank(gens) != len(gens):
        raise ValueError("claim vectors are linearly dependent")
    inv = linalg.inverse([list(x) for x in a])
    inv_power = linalg.identity(ctx.r)
    reports = []
    failure = None
    for k in range(levels + 1):
        level = claim.level(k)
        inside = all(linalg.lattice_contains(level, row) for row in inv_power)
        witness = 0
        in_delta = True
        for g in level:
            mem = delta_contains(a, g)
            if not mem.contains:
                in_delta = False
                break
            witness = max(witness, mem.k)
        if in_delta:
            # C_k sits inside Z^r A^{-m}: each generator times A^m is integral
            in_delta = all(
                all(Fraction(x).denominator == 1 for x in linalg.vec_mat(list(g), ctx.power(witness)))
                for g in level
            )
        reports.append(DeltaLevel(k, inside, in_delta, witness))
        if not (inside and in_delta):
            failure = k
            break
        inv_power = linalg.mat_mul(inv_power, inv)
    return DeltaReport(failure is None, tuple(reports), failure)


IN, OUT, UNDECIDED = "IN", "OUT", "UNDECIDED"


@dataclass(frozen=True)
class ConeDecision:
    verdict: str
    stage: str  # "power", "zero", "perron" or "none"
    witness: int = None  # power l with v A^l >= 0, for the power stage
    dot_sign: int = None  # sign of u . z, for the Perron stage
    bound: int = None

    def to_json(self):
        return {k: v for k, v in vars(self).items() if v is not None}


def cone_contains(a, x, power_bound=DEFAULT_POWER_BOUND):
    """Decide membership of a dimension-group class in the positive cone."""
    ctx = _context(x.matrix)
    v = x.v
    for l in range(power_bound + 1):
        if all(c >= 0 for c in v):
            return ConeDecision(IN, "power", witness=l)
        v = ctx.apply(v, 1)
    if dg_is_zero(x):
        return ConeDecision(IN, "zero")
    m = [list(r) for r in x.matrix]
    if ctx.det and is_primitive(m):
        sgn = pf_data(m).dot_sign(embed_invertible(x))
        return ConeDecision(IN if sgn > 0 else OUT, "perron", dot_sign=sgn)
    return ConeDecision(UNDECIDED, "none", bound=power_bound)


def _require_no_sinks(a):
    if any(not any(row) for row in a):
        raise ValueError("talented monoid arithmetic is limited to graphs without sinks")


def tm_element(a, v, i=0):
    """sum_j v_j * vertex_j(i) in the talented monoid of the graph of A."""
    a = linalg.freeze(a)
    _require_no_sinks(a)
    if any(c < 0 for c in v):
        raise ValueError("talented monoid elements have nonnegative coefficients")
    ctx = _context(a)
    v = tuple(v)
    while i < 0:
        v = ctx.apply(v, 1)
        i += 1
    return canonical(DimElement(a, v, i))


def tm_add(x, y):
    _require_no_sinks(x.matrix)
    return dg_add(x, y)


def tm_eq(x, y):
    _require_no_sinks(x.matrix)
    return dg_eq(x, y)


def tm_shift(x, n):
    """The Z-action ^n v(i) = v(i + n), which is theta_A^{-n}."""
    _require_no_sinks(x.matrix)
    return dg_shift(x, -n)


@dataclass(frozen=True)
class K0Group:
    invariant_factors: tuple

    @property
    def summands(self):
        return tuple(d for d in self.invariant_factors if d != 1)

    @property
    def is_trivial(self):
        return not self.summands

    def render(self):
        if self.is_trivial:
            return "{0̄}"
        return " ⊕ ".join("Z" if d == 0 else f"Z/{d}Z" for d in self.summands)

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors), "rendering": self.render()}


def k0_group(a):
    """coker(I - A^t) via Smith normal form."""
    n = len(a)
    m = [[int(i == j) - a[j][i] for j in range(n)] for i in range(n)]
    return K0Group(smith_normal_form_factors(m))


def smith_normal_form_factors(m):
    return linalg.smith_normal_form(m).invariant_factors


@dataclass(frozen=True)
class KgrDescription:
    kind: str  # "free", "delta_claim", "reduction", "unresolved"
    rendering: str
    detail: str = ""

    def to_json(self):
        return {"kind": self.kind, "rendering": self.rendering, "detail": self.detail}


def render_free(r):
    return "Z" if r == 1 else f"Z^{r}"


def kgr_description(a, claim=None, reduction=None, levels=8):
    """Describe K_0^gr as a group.

    ``claim`` is a DeltaClaim for det(A) != 0; ``reduction`` is a pair
    (description of the moves, KgrDescription of a shift equivalent graph),
    used for det(A) = 0 or when no claim is given.  Both are supplied by the
    catalog.
    """
    d = linalg.det(a)
    if abs(d) == 1:
        return KgrDescription("free", render_free(len(a)), "det = ±1")
    if d != 0 and (claim is not None or reduction is None):
        if claim is not None:
            rep = delta_claim_verify(a, claim, levels)
            if rep.ok:
                return KgrDescription("delta_claim", claim.render(), f"verified to level {levels}")
            return KgrDescription("unresolved", "unresolved", f"claim fails at level {rep.first_failure}")
        return KgrDescription("unresolved", "unresolved", f"det = {d}, no registered claim")
    if reduction is not None:
        how, target = reduction
        return KgrDescription("reduction", target.rendering, f"via {how}")
    return KgrDescription("unresolved", "unresolved", "det = 0, reduce via moves")
