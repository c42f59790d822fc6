"""Finite directed multigraphs, adjacency matrices and structural predicates.

Adjacency convention: entry (u, v) counts the edges u -> v, so rows are
sources and columns are ranges.
"""

import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, permutations
from math import gcd

from . import linalg

ISO_VERTEX_LIMIT = 8


class AcyclicError(ValueError):
    """Raised when a period is requested for a matrix without cycles."""


@dataclass(frozen=True)
class DirectedMultigraph:
    vertices: tuple
    edges: tuple  # (edge id, source, range)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        ids = [e[0] for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate edge id")
        vs = set(self.vertices)
        for eid, s, r in self.edges:
            if s not in vs or r not in vs:
                raise ValueError(f"edge {eid} uses an undeclared vertex")

    def index(self, v):
        return self.vertices.index(v)

    def out_edges(self, v):
        return [e for e in self.edges if e[1] == v]

    def in_edges(self, v):
        return [e for e in self.edges if e[2] == v]

    def edge(self, eid):
        for e in self.edges:
            if e[0] == eid:
                return e
        raise KeyError(eid)

    def sinks(self):
        srcs = {e[1] for e in self.edges}
        return [v for v in self.vertices if v not in srcs]

    def sources(self):
        rngs = {e[2] for e in self.edges}
        return [v for v in self.vertices if v not in rngs]

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "edges": [[s, r, eid] for eid, s, r in self.edges],
        }


def default_edge_ids(pairs):
    """Deterministic ids "s->r:k", k counting repeats of the same pair."""
    seen = Counter()
    out = []
    for s, r in pairs:
        seen[(s, r)] += 1
        out.append((f"{s}->{r}:{seen[(s, r)]}", s, r))
    return out


def graph_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, list):
        return graph_from_matrix(data)
    vertices = [str(v) for v in data["vertices"]]
    plain = []
    edges = []
    for item in data["edges"]:
        if len(item) == 3:
            edges.append((str(item[2]), str(item[0]), str(item[1])))
        elif len(item) == 2:
            plain.append((str(item[0]), str(item[1])))
            edges.append(None)
        else:
            raise ValueError(f"bad edge entry {item!r}")
    generated = iter(default_edge_ids(plain))
    edges = [e if e is not None else next(generated) for e in edges]
    return DirectedMultigraph(tuple(vertices), tuple(edges))


def adjacency_matrix(g):
    n = len(g.vertices)
    pos = {v: i for i, v in enumerate(g.vertices)}
    m = linalg.zeros(n, n)
    for _, s, r in g.edges:
        m[pos[s]][pos[r]] += 1
    return m


def graph_from_matrix(m, prefix="v", names=None):
    m = linalg.as_matrix(m)
    if not linalg.is_square(m):
        raise ValueError("adjacency matrix must be square")
    if not linalg.is_nonneg(m):
        raise ValueError("adjacency matrix must be nonnegative")
    n = len(m)
    names = list(names) if names else [f"{prefix}{i + 1}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(n):
            pairs.extend([(names[i], names[j])] * m[i][j])
    return DirectedMultigraph(tuple(names), tuple(default_edge_ids(pairs)))


def hereditary_saturated_subsets(g):
    """All hereditary and saturated vertex sets, ordered by size then index."""
    verts = g.vertices
    succ = {v: [e[2] for e in g.out_edges(v)] for v in verts}
    out = []
    for size in range(len(verts) + 1):
        for combo in combinations(range(len(verts)), size):
            h = {verts[i] for i in combo}
            if any(w not in h for v in h for w in succ[v]):
                continue
            if any(v not in h and succ[v] and all(w in h for w in succ[v]) for v in verts):
                continue
            out.append(frozenset(h))
    return out


@dataclass(frozen=True)
class SmallGraphReport:
    vertex_count: int
    has_parallel_edges: bool
    sinks: tuple
    sources: tuple
    hereditary_saturated: tuple
    exitless_cycles: tuple
    is_small: bool

    def to_json(self):
        return {
            "vertex_count": self.vertex_count,
            "has_parallel_edges": self.has_parallel_edges,
            "sinks": list(self.sinks),
            "sources": list(self.sources),
            "hereditary_saturated": [sorted(h) for h in self.hereditary_saturated],
            "exitless_cycles": [list(c) for c in self.exitless_cycles],
            "is_small": self.is_small,
        }


def exitless_cycles(g):
    """Cycles none of whose vertices emits a second edge (Condition (L) fails on each).

    Such a cycle runs through vertices of out-degree one, so it is a cycle of
    the successor map restricted to those vertices.  Each is reported once,
    starting from its first vertex in vertex order.
    """
    nxt = {}
    for v in g.vertices:
        outs = g.out_edges(v)
        if len(outs) == 1:
            nxt[v] = outs[0][2]
    found = []
    seen = set()
    for v in g.vertices:
        path = []
        u = v
        while u in nxt and u not in path and u not in seen:
            path.append(u)
            u = nxt[u]
        seen.update(path)
        if u in path:
            cyc = path[path.index(u):]
            first = min(cyc, key=g.vertices.index)
            i = cyc.index(first)
            found.append(tuple(cyc[i:] + cyc[:i]))
    return tuple(found)


def small_graph_report(g):
    """Three vertices, no parallel edges, no sinks, only trivial hereditary
    saturated sets, and every cycle has an exit (so the Leavitt path algebra
    is purely infinite simple)."""
    m = adjacency_matrix(g)
    parallel = any(x >= 2 for r in m for x in r)
    hs = hereditary_saturated_subsets(g)
    sinks = tuple(g.sinks())
    trivial = hs == [frozenset(), frozenset(g.vertices)]
    exitless = exitless_cycles(g)
    small = len(g.vertices) == 3 and not parallel and not sinks and trivial and not exitless
    return SmallGraphReport(len(g.vertices), parallel, sinks, tuple(g.sources()), tuple(hs), exitless, small)


def _reach(m):
    n = len(m)
    reach = [[bool(m[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def strong_components(m):
    """Strongly connected components carrying at least one cycle."""
    n = len(m)
    reach = _reach(m)
    seen = set()
    comps = []
    for i in range(n):
        if i in seen or not reach[i][i]:
            continue
        comp = [j for j in range(n) if reach[i][j] and reach[j][i]]
        seen.update(comp)
        comps.append(comp)
    return comps


def _component_period(m, comp):
    members = set(comp)
    level = {comp[0]: 0}
    queue = deque([comp[0]])
    g = 0
    while queue:
        u = queue.popleft()
        for v in comp:
            if not m[u][v]:
                continue
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    for u in members:
        for v in members:
            if m[u][v]:
                g = gcd(g, abs(level[u] + 1 - level[v]))
    return g


def period(m):
    """gcd of cycle lengths over the strongly connected cores."""
    comps = strong_components(m)
    if not comps:
        raise AcyclicError("matrix has no cycles; period undefined")
    return reduce(gcd, (_component_period(m, c) for c in comps))


def is_irreducible(m):
    n = len(m)
    if n == 0:
        return False
    reach = _reach(m)
    return all(reach[i][j] for i in range(n) for j in range(n))


def _primitive_by_power(m):
    n = len(m)
    k = (n - 1) ** 2 + 1
    b = [[int(x > 0) for x in r] for r in m]
    p = linalg.mat_pow(b, k)
    return all(x > 0 for r in p for x in r)


def is_primitive(m):
    by_period = is_irreducible(m) and period(m) == 1
    by_power = _primitive_by_power(m)
    if by_period != by_power:
        raise AssertionError("primitivity routes disagree")
    return by_period


def permute(m, perm):
    """Matrix B with B[perm[i]][perm[j]] = m[i][j]."""
    n = len(m)
    b = linalg.zeros(n, n)
    for i in range(n):
        for j in range(n):
            b[perm[i]][perm[j]] = m[i][j]
    return b


def matrices_isomorphic(a, b):
    """Lexicographically least perm with permute(a, perm) == b, or None."""
    n = len(a)
    if n != len(b):
        return None
    if n > ISO_VERTEX_LIMIT:
        raise ValueError(f"isomorphism search limited to {ISO_VERTEX_LIMIT} vertices")
    if sorted(map(sorted, a)) != sorted(map(sorted, b)):
        return None
    for perm in permutations(range(n)):
        if all(a[i][j] == b[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return perm
    return None


def graphs_isomorphic(g1, g2):
    """Vertex bijection g1 -> g2 preserving edge multiplicities, or None."""
    perm = matrices_isomorphic(adjacency_matrix(g1), adjacency_matrix(g2))
    if perm is None:
        return None
    return {g1.vertices[i]: g2.vertices[perm[i]] for i in range(len(perm))}


def canonical_form(m):
    """Lexicographically least matrix among simultaneous permutations."""
    n = len(m)
    best = None
    for perm in permutations(range(n)):
        cand = tuple(tuple(m[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best
