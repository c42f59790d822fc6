"""Searches and certificates for shift equivalences between matrices.

Every positive answer carries a witness that ``verify`` re-checks by exact
multiplication.  Negative answers are three-valued: FOUND, UNCONDITIONAL
(the algebra rules a witness out) and BOUNDED (only the searched region is
ruled out).
"""

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from . import linalg
from .algebraic import algebraic_equal, pf_data, sign_at_root
from .graph import canonical_form, is_irreducible, matrices_isomorphic
from . import poly

FOUND, UNCONDITIONAL, BOUNDED = "FOUND", "UNCONDITIONAL", "BOUNDED"
BUDGET_ENV = "SHIFTEQUIV_SEARCH_BUDGET"
DEFAULT_BUDGET = 50_000_000


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, message, estimate=None, stats=None):
        super().__init__(message)
        self.estimate = estimate
        self.stats = stats or {}


def search_budget():
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _mat(m):
    return [list(r) for r in m]


@dataclass(frozen=True)
class EsseWitness:
    R: tuple
    S: tuple

    def to_json(self):
        return {"kind": "esse", "R": _mat(self.R), "S": _mat(self.S)}

    def reversed(self):
        return EsseWitness(self.S, self.R)


@dataclass(frozen=True)
class SseChain:
    steps: tuple  # EsseWitness per step

    @property
    def lag(self):
        return len(self.steps)

    def to_json(self):
        return {
            "kind": "sse",
            "lag": self.lag,
            "steps": [{"R": _mat(w.R), "S": _mat(w.S)} for w in self.steps],
        }


@dataclass(frozen=True)
class SeWitness:
    R: tuple
    S: tuple
    lag: int

    def to_json(self):
        return {"kind": "se", "R": _mat(self.R), "S": _mat(self.S), "lag": self.lag}


@dataclass(frozen=True)
class IntertwinerWitness:
    T: tuple
    unimodular: bool = False
    pointed: bool = False
    cone_preserving: bool = False
    unit_from: tuple = None
    unit_to: tuple = None

    def to_json(self):
        out = {
            "kind": "intertwiner",
            "T": _mat(self.T),
            "flags": {
                "unimodular": self.unimodular,
                "pointed": self.pointed,
                "cone_preserving": self.cone_preserving,
            },
        }
        if self.unit_from is not None:
            out["unit_from"] = list(self.unit_from)
            out["unit_to"] = list(self.unit_to)
        return out


def certificate_from_json(data):
    kind = data.get("kind")
    fz = linalg.freeze
    if kind == "esse":
        return EsseWitness(fz(data["R"]), fz(data["S"]))
    if kind == "sse":
        return SseChain(tuple(EsseWitness(fz(s["R"]), fz(s["S"])) for s in data["steps"]))
    if kind == "se":
        return SeWitness(fz(data["R"]), fz(data["S"]), int(data["lag"]))
    if kind == "intertwiner":
        flags = data.get("flags", {})
        uf = data.get("unit_from")
        ut = data.get("unit_to")
        return IntertwinerWitness(
            fz(data["T"]),
            bool(flags.get("unimodular")),
            bool(flags.get("pointed")),
            bool(flags.get("cone_preserving")),
            tuple(uf) if uf is not None else None,
            tuple(ut) if ut is not None else None,
        )
    raise ValueError(f"unknown certificate kind {kind!r}")


@dataclass(frozen=True)
class Verification:
    ok: bool
    diagnostics: tuple = ()

    def __bool__(self):
        return self.ok


def _mul(a, b, label, errs):
    try:
        return linalg.mat_mul(_mat(a), _mat(b))
    except ValueError:
        errs.append(f"{label}: shapes {linalg.shape(a)} and {linalg.shape(b)} do not multiply")
        return None


def _equation(lhs, rhs, label, errs):
    if lhs is None or rhs is None:
        return False
    if _mat(lhs) != _mat(rhs):
        errs.append(f"{label} fails")
        return False
    return True


def _nonneg(m, label, errs):
    if not linalg.is_nonneg(m):
        errs.append(f"{label} has a negative entry")


def verify(cert, a, b):
    """Re-check every equation of a certificate for the pair (A, B)."""
    errs = []
    a, b = _mat(a), _mat(b)
    if isinstance(cert, EsseWitness):
        _nonneg(cert.R, "R", errs)
        _nonneg(cert.S, "S", errs)
        _equation(_mul(cert.R, cert.S, "R S", errs), a, "A = R S", errs)
        _equation(_mul(cert.S, cert.R, "S R", errs), b, "B = S R", errs)
    elif isinstance(cert, SseChain):
        current = a
        for i, step in enumerate(cert.steps):
            _nonneg(step.R, f"R_{i + 1}", errs)
            _nonneg(step.S, f"S_{i + 1}", errs)
            if not _equation(_mul(step.R, step.S, f"R_{i + 1} S_{i + 1}", errs), current,
                             f"step {i + 1}: R S = previous matrix", errs):
                break
            current = _mul(step.S, step.R, f"S_{i + 1} R_{i + 1}", errs)
        else:
            _equation(current, b, "last S R = B", errs)
    elif isinstance(cert, SeWitness):
        if cert.lag < 1:
            errs.append("lag must be >= 1")
        else:
            _nonneg(cert.R, "R", errs)
            _nonneg(cert.S, "S", errs)
            if not linalg.is_square(a) or not linalg.is_square(b):
                errs.append("A and B must be square")
            else:
                _equation(_mul(cert.R, cert.S, "R S", errs), linalg.mat_pow(a, cert.lag), "A^k = R S", errs)
                _equation(_mul(cert.S, cert.R, "S R", errs), linalg.mat_pow(b, cert.lag), "B^k = S R", errs)
                _equation(_mul(a, cert.R, "A R", errs), _mul(cert.R, b, "R B", errs), "A R = R B", errs)
                _equation(_mul(cert.S, a, "S A", errs), _mul(b, cert.S, "B S", errs), "S A = B S", errs)
    elif isinstance(cert, IntertwinerWitness):
        t = _mat(cert.T)
        if _equation(_mul(a, t, "A T", errs), _mul(t, b, "T B", errs), "A T = T B", errs):
            flags = intertwiner_flags(a, b, t, cert.unit_from, cert.unit_to)
            for name in ("unimodular", "pointed", "cone_preserving"):
                if getattr(cert, name) and not flags[name]:
                    errs.append(f"flag {name} does not hold")
    else:
        errs.append(f"unsupported certificate {type(cert).__name__}")
    return Verification(not errs, tuple(errs))


def unit_transfer(a, b, r):
    """Image (1, ..., 1) R of the order unit of A under [v, k] -> [vR, k]."""
    if len(r) != len(a):
        raise ValueError("R must have one row per vertex of A")
    if r and len(r[0]) != len(b):
        raise ValueError("R must have one column per vertex of B")
    return tuple(linalg.vec_mat([1] * len(a), _mat(r)))


# elementary shift equivalence search -------------------------------------


@dataclass(frozen=True)
class EsseSearchResult:
    witnesses: tuple
    verdict: str
    entry_bound: int
    forced_bound: tuple  # (bound on R, bound on S) implied by the zero pattern, or None
    note: str = ""

    def to_json(self):
        return {
            "verdict": self.verdict,
            "entry_bound": self.entry_bound,
            "forced_bound": list(self.forced_bound) if self.forced_bound else None,
            "note": self.note,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def forced_entry_bounds(a, b):
    """Bounds on the entries of any nonnegative (R, S) with A = RS, B = SR.

    From A = RS: if row k of S is nonzero then R[i][k] <= A[i][j] for some j,
    and row k of S is nonzero whenever row k of B = S R is.  The same
    reasoning for columns, and for B = SR, gives the bounds below.
    Returns (bound on R, bound on S); None means unbounded.
    """
    ma, mb = linalg.max_entry(a), linalg.max_entry(b)

    def no_zero_rows(m):
        return all(any(r) for r in m)

    def no_zero_cols(m):
        return all(any(c) for c in zip(*m))

    r_bounds, s_bounds = [], []
    if no_zero_rows(b):
        r_bounds.append(ma)
    if no_zero_rows(a):
        s_bounds.append(mb)
    if no_zero_cols(b):
        s_bounds.append(ma)
    if no_zero_cols(a):
        r_bounds.append(mb)
    return (min(r_bounds) if r_bounds else None, min(s_bounds) if s_bounds else None)


def _all_matrices(rows, cols, m):
    for flat in product(range(m + 1), repeat=rows * cols):
        yield tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


def _esse_unpruned(a, b, c, m):
    r = len(a)
    out = []
    for rm in _all_matrices(r, c, m):
        for sm in _all_matrices(c, r, m):
            if linalg.mat_mul(rm, sm) == a and linalg.mat_mul(sm, rm) == b:
                out.append(EsseWitness(rm, sm))
    return out


def _esse_pruned(a, b, c, m):
    r = len(a)
    rows = list(product(range(m + 1), repeat=c))
    out = []
    for sm in _all_matrices(c, r, m):
        # bucket candidate rows of R by the row they produce in R S
        buckets = {}
        for row in rows:
            key = tuple(sum(row[k] * sm[k][j] for k in range(c)) for j in range(r))
            buckets.setdefault(key, []).append(row)
        choices = [buckets.get(tuple(a[i]), []) for i in range(r)]
        if any(not ch for ch in choices):
            continue
        for rm in product(*choices):
            if linalg.mat_mul(sm, rm) == b:
                out.append(EsseWitness(tuple(rm), sm))
    return out


def esse_search_estimate(a, b, entry_bound, c, prune=True):
    r = len(a)
    base = entry_bound + 1
    if prune:
        return base ** (c * r) * base**c
    return base ** (2 * r * c)


def search_esse(a, b, entry_bound=1, inner_dims=None, prune=True, budget=None):
    """All (R, S) with entries in [0, m], A = R S and B = S R."""
    a, b = _mat(a), _mat(b)
    if not (linalg.is_square(a) and linalg.is_square(b)):
        raise ValueError("A and B must be square")
    if not (linalg.is_nonneg(a) and linalg.is_nonneg(b)):
        raise ValueError("A and B must be nonnegative")
    dims = list(inner_dims) if inner_dims else [len(b)]
    budget = search_budget() if budget is None else budget
    found = []
    for c in dims:
        if c != len(b):
            # S R is c x c, so only c = dim B can produce B
            continue
        est = esse_search_estimate(a, b, entry_bound, c, prune)
        if est > budget:
            raise SearchBudgetExceeded(
                f"search space estimate {est} exceeds budget {budget} (set {BUDGET_ENV})", estimate=est
            )
        found.extend(_esse_pruned(a, b, c, entry_bound) if prune else _esse_unpruned(a, b, c, entry_bound))
    found.sort(key=lambda w: (w.R, w.S))
    for w in found:
        if not verify(w, a, b):
            raise AssertionError("search produced an invalid witness")
    forced = forced_entry_bounds(a, b)
    if found:
        return EsseSearchResult(tuple(found), FOUND, entry_bound, forced)
    covered = len(b) in dims and forced[0] is not None and forced[1] is not None and max(forced) <= entry_bound
    if covered:
        note = f"zero patterns force entries of R <= {forced[0]} and S <= {forced[1]}"
        return EsseSearchResult((), UNCONDITIONAL, entry_bound, forced, note)
    return EsseSearchResult((), BOUNDED, entry_bound, forced, "no witness within the entry bound")


# strong shift equivalence search ------------------------------------------


def _row_decompositions(row, parts_min=2):
    """Unordered decompositions of a nonnegative vector into nonzero parts."""
    row = tuple(row)
    results = []

    def sub_vectors(v):
        for x in product(*(range(c + 1) for c in v)):
            if any(x):
                yield x

    def rec(rest, maxpart, acc):
        if not any(rest):
            if len(acc) >= parts_min:
                results.append(tuple(acc))
            return
        for part in sub_vectors(rest):
            if part > maxpart:
                continue
            rec(tuple(x - y for x, y in zip(rest, part)), part, acc + [part])

    rec(row, row, [])
    return results


def _out_splits(m):
    """(N, R, S) for every nontrivial out-split N of M, with M = RS, N = SR."""
    n = len(m)
    out = []
    for v in range(n):
        for parts in _row_decompositions(m[v]):
            k = len(parts)
            new_n = n + k - 1
            owner = [u for u in range(v)] + [v] * k + [u for u in range(v + 1, n)]
            d = linalg.zeros(n, new_n)
            for x, u in enumerate(owner):
                d[u][x] = 1
            e = []
            for x, u in enumerate(owner):
                e.append(list(parts[x - v]) if u == v else list(m[u]))
            out.append((linalg.mat_mul(e, d), d, e))
    return out


def _out_amalgamations(m):
    """(N, R, S) merging vertices with equal columns: M = RS, N = SR."""
    n = len(m)
    cols = linalg.transpose(m)
    out = []
    classes = {}
    for j in range(n):
        classes.setdefault(tuple(cols[j]), []).append(j)
    for members in classes.values():
        for size in range(2, len(members) + 1):
            for group in combinations(members, size):
                keep = group[0]
                owner = {}
                new_index = []
                for x in range(n):
                    if x in group and x != keep:
                        continue
                    new_index.append(x)
                pos = {x: i for i, x in enumerate(new_index)}
                for x in range(n):
                    owner[x] = pos[keep] if x in group else pos[x]
                small = len(new_index)
                # E: M's rows with the merged columns collapsed (n x small)
                e = [[m[x][new_index[i]] for i in range(small)] for x in range(n)]
                d = linalg.zeros(small, n)
                for x in range(n):
                    d[owner[x]][x] = 1
                out.append((linalg.mat_mul(d, e), e, d))
    return out


def _transposed(moves):
    t = linalg.transpose
    return [(t(nm), t(s), t(r)) for nm, r, s in moves]


def sse_neighbors(m):
    """All one-step split and amalgamation neighbours of M with witnesses."""
    mt = linalg.transpose(m)
    out = []
    out.extend(_out_splits(m))
    out.extend(_transposed(_out_splits(mt)))
    out.extend(_out_amalgamations(m))
    out.extend(_transposed(_out_amalgamations(mt)))
    return out


@dataclass(frozen=True)
class SseSearchResult:
    chain: SseChain
    verdict: str
    stats: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "verdict": self.verdict,
            "chain": self.chain.to_json() if self.chain else None,
            "stats": self.stats,
        }


def _permutation_step(n_mat, target):
    """ESSE (R, S) taking N to a permuted copy equal to target, or None."""
    perm = matrices_isomorphic(n_mat, target)
    if perm is None:
        return None
    size = len(n_mat)
    p = linalg.zeros(size, size)
    for i in range(size):
        p[i][perm[i]] = 1
    return p


def search_sse_path(a, b, max_steps=2, size_bound=4, entry_bound=None, max_nodes=200_000):
    """Breadth-first search for a chain of splits and amalgamations."""
    a, b = _mat(a), _mat(b)
    if a == b:
        return SseSearchResult(SseChain(()), FOUND, {"expanded": 0})
    target = canonical_form(b)
    start = canonical_form(a)
    if start == target:
        p = _permutation_step(a, b)
        step = EsseWitness(linalg.freeze(linalg.mat_mul(a, p)), linalg.freeze(linalg.transpose(p)))
        chain = SseChain((step,))
        return SseSearchResult(chain, FOUND, {"expanded": 0})
    visited = {start}
    queue = deque([(a, ())])
    expanded = 0
    while queue:
        m, steps = queue.popleft()
        if len(steps) >= max_steps:
            continue
        expanded += 1
        if expanded > max_nodes:
            stats = {"expanded": expanded, "visited": len(visited), "frontier": len(queue)}
            raise SearchBudgetExceeded("node budget exhausted", stats=stats)
        for n_mat, r, s in sse_neighbors(m):
            if len(n_mat) > size_bound:
                continue
            if entry_bound is not None and linalg.max_entry(n_mat) > entry_bound:
                continue
            key = canonical_form(n_mat)
            if key in visited:
                continue
            visited.add(key)
            new_steps = steps + (EsseWitness(linalg.freeze(r), linalg.freeze(s)),)
            if key == target:
                p = _permutation_step(n_mat, b)
                pt = linalg.transpose(p)
                last = EsseWitness(linalg.freeze(linalg.mat_mul(r, p)), linalg.freeze(linalg.mat_mul(pt, s)))
                chain = SseChain(new_steps[:-1] + (last,))
                if not verify(chain, a, b):
                    raise AssertionError("search produced an invalid chain")
                stats = {"expanded": expanded, "visited": len(visited)}
                return SseSearchResult(chain, FOUND, stats)
            queue.append((n_mat, new_steps))
    stats = {"expanded": expanded, "visited": len(visited)}
    return SseSearchResult(None, BOUNDED, stats)


def sse_to_se(chain, a=None, b=None):
    """Compose R = R_1 ... R_k and S = S_k ... S_1 into a lag-k witness."""
    if chain.lag < 1:
        raise ValueError("lag must be >= 1")
    r = _mat(chain.steps[0].R)
    s = _mat(chain.steps[0].S)
    for step in chain.steps[1:]:
        r = linalg.mat_mul(r, step.R)
        s = linalg.mat_mul(step.S, s)
    w = SeWitness(linalg.freeze(r), linalg.freeze(s), chain.lag)
    if a is None:
        a = linalg.mat_mul(chain.steps[0].R, chain.steps[0].S)
    if b is None:
        b = linalg.mat_mul(chain.steps[-1].S, chain.steps[-1].R)
    if not verify(chain, a, b):
        raise ValueError("invalid chain")
    check = verify(w, a, b)
    if not check:
        raise AssertionError(f"composed witness fails: {check.diagnostics}")
    return w


# intertwiners --------------------------------------------------------------


def cone_preserving(a, b, t):
    """T z_B is a positive multiple of z_A (both Perron vectors, exact)."""
    if not (is_irreducible(a) and is_irreducible(b)):
        return False
    pa, pb = _pf(linalg.freeze(a)), _pf(linalg.freeze(b))
    if not algebraic_equal(pa.lam, pb.lam):
        return False
    lam = pa.lam
    y = []
    for row in t:
        acc = poly.ZERO
        for tij, zj in zip(row, pb.z):
            if tij:
                acc = poly.add(acc, poly.scale(zj, tij))
        y.append(acc)
    za = pa.z
    n = len(za)
    for i in range(n):
        for j in range(i + 1, n):
            minor = poly.sub(poly.mul(y[i], za[j]), poly.mul(y[j], za[i]))
            if sign_at_root(_int_poly(minor), lam) != 0:
                return False
    return sign_at_root(_int_poly(y[0]), lam) > 0


@lru_cache(maxsize=256)
def _pf(frozen):
    return pf_data(_mat(frozen))


def _int_poly(p):
    den = linalg.common_denominator([p]) if p else 1
    return poly.normalize(int(c * den) for c in p)


def intertwiner_flags(a, b, t, unit_from=None, unit_to=None):
    a, b, t = _mat(a), _mat(b), _mat(t)
    unit_from = tuple(unit_from) if unit_from is not None else (1,) * len(a)
    unit_to = tuple(unit_to) if unit_to is not None else (1,) * len(b)
    square = linalg.is_square(t) and len(t) > 0
    return {
        "unimodular": square and abs(linalg.det(t)) == 1,
        "pointed": tuple(linalg.vec_mat(list(unit_from), t)) == unit_to,
        "cone_preserving": square and cone_preserving(a, b, t),
    }


@dataclass(frozen=True)
class IntertwinerSearchResult:
    witnesses: tuple
    verdict: str
    reason: str
    lattice_rank: int
    candidates: int = 0

    def to_json(self):
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "lattice_rank": self.lattice_rank,
            "candidates": self.candidates,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def search_intertwiner(
    a,
    b,
    require_pointed=False,
    require_unimodular=False,
    require_cone=False,
    coeff_bound=3,
    unit_from=None,
    unit_to=None,
):
    """Integer T with A T = T B and the requested properties.

    T acts on row vectors, [v, k] -> [vT, k], so it maps G_A to G_B.
    Pointedness asks unit_from T = unit_to (default: all-ones vectors).
    """
    a, b = _mat(a), _mat(b)
    r, s = len(a), len(b)
    unit_from = tuple(unit_from) if unit_from is not None else (1,) * r
    unit_to = tuple(unit_to) if unit_to is not None else (1,) * s
    basis = linalg.intertwiner_lattice(a, b)
    rank = len(basis)
    flat = [[x for row in m for x in row] for m in basis]
    dims = "both dimension groups are Z^r" if abs(linalg.det(a)) == 1 and abs(linalg.det(b)) == 1 else ""

    def wanted(t):
        pointed = tuple(linalg.vec_mat(list(unit_from), t)) == unit_to
        unimodular = r == s and abs(linalg.det(t)) == 1
        if (require_pointed and not pointed) or (require_unimodular and not unimodular):
            return False, None
        flags = intertwiner_flags(a, b, t, unit_from, unit_to)
        return not require_cone or flags["cone_preserving"], flags

    def build(coeffs, offset):
        vec = list(offset)
        for c, bv in zip(coeffs, flat):
            if c:
                vec = [x + c * y for x, y in zip(vec, bv)]
        return [vec[i * s:(i + 1) * s] for i in range(r)]

    def witness(t, flags):
        return IntertwinerWitness(
            linalg.freeze(t), flags["unimodular"], flags["pointed"], flags["cone_preserving"], unit_from, unit_to
        )

    if not basis:
        return IntertwinerSearchResult((), UNCONDITIONAL, "only the zero matrix intertwines", 0)

    if require_pointed:
        # unit_from (sum c_i X_i) = unit_to, linear in the coefficients c
        eqs = [[linalg.vec_mat(list(unit_from), m)[j] for m in basis] for j in range(s)]
        sol = linalg.solve_integer(eqs, list(unit_to))
        if not sol.rational:
            return IntertwinerSearchResult((), UNCONDITIONAL, "pointedness system has no rational solution", rank)
        if sol.particular is None:
            reason = "pointedness system has no integer solution"
            if dims:
                reason += f" ({dims}, so no pointed homomorphism exists)"
            return IntertwinerSearchResult((), UNCONDITIONAL, reason, rank)
        offset = [0] * (r * s)
        for c, bv in zip(sol.particular, flat):
            offset = [x + c * y for x, y in zip(offset, bv)]
        free = [[sum(k[i] * flat[i][j] for i in range(rank)) for j in range(r * s)] for k in sol.kernel]
        if not free:
            t = build((), offset)
            ok, _ = wanted(t)
            flags = intertwiner_flags(a, b, t, unit_from, unit_to)
            if ok:
                return IntertwinerSearchResult((witness(t, flags),), FOUND, "unique pointed intertwiner", rank, 1)
            failed = [k for k, want in (("unimodular", require_unimodular), ("cone_preserving", require_cone))
                      if want and not flags[k]]
            reason = f"unique pointed candidate {t} fails: {', '.join(failed)}"
            return IntertwinerSearchResult((), UNCONDITIONAL, reason, rank, 1)
        gens, start = free, offset
    else:
        gens, start = flat, [0] * (r * s)

    found = []
    count = 0
    for coeffs in product(range(-coeff_bound, coeff_bound + 1), repeat=len(gens)):
        vec = list(start)
        for c, g in zip(coeffs, gens):
            if c:
                vec = [x + c * y for x, y in zip(vec, g)]
        if not any(vec):
            continue
        t = [vec[i * s:(i + 1) * s] for i in range(r)]
        count += 1
        ok, flags = wanted(t)
        if ok:
            found.append(witness(t, flags))
    found.sort(key=lambda w: w.T)
    if found:
        return IntertwinerSearchResult(tuple(found), FOUND, f"coefficients bounded by {coeff_bound}", rank, count)
    return IntertwinerSearchResult((), BOUNDED, f"none with coefficients bounded by {coeff_bound}", rank, count)
