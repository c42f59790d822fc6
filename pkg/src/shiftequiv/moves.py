"""Williams graph moves and the elementary shift equivalences they induce.

Split vertices are renamed v^1, ..., v^n and take the position of v in the
vertex order.  An edge that has to be duplicated keeps its id with a
superscript; every other vertex and edge keeps its id.
"""

from dataclasses import dataclass

from . import linalg
from .graph import DirectedMultigraph, adjacency_matrix, graphs_isomorphic

OUT_SPLIT, IN_SPLIT, GEN_IN_SPLIT = "out_split", "in_split", "gen_in_split"
SOURCE_ELIM, SOURCE_ADD = "source_elim", "source_add"


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class SplitSpec:
    vertex: str
    partition: tuple  # tuple of tuples of edge ids
    allow_empty_parts: bool = False

    def __post_init__(self):
        object.__setattr__(self, "partition", tuple(tuple(p) for p in self.partition))

    def to_json(self):
        return {
            "vertex": self.vertex,
            "partition": [list(p) for p in self.partition],
            "allow_empty_parts": self.allow_empty_parts,
        }


def _check_partition(edges, spec):
    ids = [e[0] for e in edges]
    flat = [x for part in spec.partition for x in part]
    if len(flat) != len(set(flat)):
        raise MoveError("partition parts overlap")
    if sorted(flat) != sorted(ids):
        raise MoveError(f"partition must cover exactly {sorted(ids)}")
    if not spec.partition:
        raise MoveError("partition has no parts")
    if not spec.allow_empty_parts and any(not p for p in spec.partition):
        raise MoveError("empty part in a proper split")
    return {eid: i for i, part in enumerate(spec.partition) for eid in part}


def _copies(v, n):
    return [f"{v}^{i + 1}" for i in range(n)]


def _replace_vertex(vertices, v, new):
    out = []
    for u in vertices:
        out.extend(new if u == v else [u])
    return tuple(out)


def maximal_out_partition(g, v):
    return tuple((e[0],) for e in g.out_edges(v))


def maximal_in_partition(g, v):
    return tuple((e[0],) for e in g.in_edges(v))


def out_split(g, vertex, partition):
    spec = partition if isinstance(partition, SplitSpec) else SplitSpec(vertex, partition)
    v = spec.vertex
    outs = g.out_edges(v)
    if not outs:
        raise MoveError(f"{v} is a sink")
    part_of = _check_partition(outs, spec)
    n = len(spec.partition)
    copies = _copies(v, n)
    edges = []
    for eid, s, r in g.edges:
        src = copies[part_of[eid]] if s == v else s
        if r == v:
            edges.extend((f"{eid}^{j + 1}", src, copies[j]) for j in range(n))
        else:
            edges.append((eid, src, r))
    return DirectedMultigraph(_replace_vertex(g.vertices, v, copies), tuple(edges))


def gen_in_split(g, vertex, partition, allow_empty_parts=True):
    """Move (I-): split w by a partition of the edges entering it.

    Edges out of w are copied once for every new vertex w^i; an edge into w
    that lies in part j ends at w^j.
    """
    if isinstance(partition, SplitSpec):
        spec = partition
    else:
        spec = SplitSpec(vertex, partition, allow_empty_parts)
    w = spec.vertex
    ins = g.in_edges(w)
    if allow_empty_parts and (not ins or not g.out_edges(w)):
        raise MoveError(f"{w} is not regular")
    if not ins:
        raise MoveError(f"{w} receives no edges")
    part_of = _check_partition(ins, spec)
    n = len(spec.partition)
    copies = _copies(w, n)
    edges = []
    for eid, s, r in g.edges:
        rng = copies[part_of[eid]] if r == w else r
        if s == w:
            edges.extend((f"{eid}^{i + 1}", copies[i], rng) for i in range(n))
        else:
            edges.append((eid, s, rng))
    return DirectedMultigraph(_replace_vertex(g.vertices, w, copies), tuple(edges))


def in_split(g, vertex, partition):
    spec = partition if isinstance(partition, SplitSpec) else SplitSpec(vertex, partition)
    if spec.allow_empty_parts:
        raise MoveError("a proper in-split has no empty parts")
    return gen_in_split(g, spec.vertex, spec, allow_empty_parts=False)


def source_eliminate(g, v):
    if g.in_edges(v):
        raise MoveError(f"{v} is not a source")
    verts = tuple(u for u in g.vertices if u != v)
    return DirectedMultigraph(verts, tuple(e for e in g.edges if e[1] != v))


def source_add(g, targets, name=None):
    """Append a new vertex with one edge to each target (with multiplicity)."""
    if not targets:
        raise MoveError("a new source needs at least one target")
    for t in targets:
        if t not in g.vertices:
            raise MoveError(f"unknown vertex {t}")
    if name is None:
        k = 0
        name = "s"
        while name in g.vertices:
            k += 1
            name = f"s{k}"
    seen = {}
    new_edges = []
    for t in targets:
        seen[t] = seen.get(t, 0) + 1
        new_edges.append((f"{name}->{t}:{seen[t]}", name, t))
    return DirectedMultigraph(g.vertices + (name,), g.edges + tuple(new_edges))


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    input: DirectedMultigraph
    spec: object
    output: DirectedMultigraph
    esse_witness: tuple = None

    def replay(self):
        return apply_move(self.input, self.kind, self.spec)

    def to_json(self):
        spec = self.spec.to_json() if isinstance(self.spec, SplitSpec) else self.spec
        out = {"kind": self.kind, "spec": spec}
        if self.esse_witness:
            out["R"], out["S"] = [list(map(list, m)) for m in self.esse_witness]
        return out


def apply_move(g, kind, spec):
    if kind == OUT_SPLIT:
        return out_split(g, spec.vertex, spec)
    if kind == IN_SPLIT:
        return in_split(g, spec.vertex, spec)
    if kind == GEN_IN_SPLIT:
        return gen_in_split(g, spec.vertex, spec)
    if kind == SOURCE_ELIM:
        return source_eliminate(g, spec)
    if kind == SOURCE_ADD:
        return source_add(g, spec)
    raise MoveError(f"unknown move {kind}")


def make_record(g, kind, spec):
    h = apply_move(g, kind, spec)
    witness = None
    if kind in (OUT_SPLIT, IN_SPLIT, GEN_IN_SPLIT):
        witness = move_to_esse(MoveRecord(kind, g, spec, h))
    return MoveRecord(kind, g, spec, h, witness)


def move_to_esse(record):
    """(R, S) with R S = A_input and S R = A_output."""
    g, h, spec = record.input, record.output, record.spec
    if record.kind not in (OUT_SPLIT, IN_SPLIT, GEN_IN_SPLIT):
        raise MoveError("only splits induce an elementary shift equivalence")
    v = spec.vertex
    n = len(spec.partition)
    gpos = {u: i for i, u in enumerate(g.vertices)}
    hpos = {u: i for i, u in enumerate(h.vertices)}
    copies = _copies(v, n)
    part_of = {eid: i for i, part in enumerate(spec.partition) for eid in part}

    def parent(x):
        return v if x in copies else x

    # division matrix: old vertex -> its copies
    div = linalg.zeros(len(g.vertices), len(h.vertices))
    for x in h.vertices:
        div[gpos[parent(x)]][hpos[x]] = 1
    if record.kind == OUT_SPLIT:
        # edge matrix: new source vertex -> old range
        em = linalg.zeros(len(h.vertices), len(g.vertices))
        for eid, s, r in g.edges:
            src = copies[part_of[eid]] if s == v else s
            em[hpos[src]][gpos[r]] += 1
        r_mat, s_mat = div, em
    else:
        # old source -> new range vertex
        em = linalg.zeros(len(g.vertices), len(h.vertices))
        for eid, s, r in g.edges:
            rng = copies[part_of[eid]] if r == v else r
            em[gpos[s]][hpos[rng]] += 1
        r_mat, s_mat = em, linalg.transpose(div)
    if linalg.mat_mul(r_mat, s_mat) != adjacency_matrix(g):
        raise AssertionError("split witness: R S differs from the input matrix")
    if linalg.mat_mul(s_mat, r_mat) != adjacency_matrix(h):
        raise AssertionError("split witness: S R differs from the output matrix")
    return linalg.freeze(r_mat), linalg.freeze(s_mat)


@dataclass(frozen=True)
class UnitalCheck:
    ok: bool
    reason: str = ""


def unital_in_split_check(e, f, g, w, part_e, part_f):
    """Move (I+): both E and F arise from G by (I-) at w with n parts each."""
    if len(part_e) != len(part_f):
        return UnitalCheck(False, "partitions use different numbers of sets")
    try:
        ge = gen_in_split(g, w, part_e)
        gf = gen_in_split(g, w, part_f)
    except MoveError as exc:
        return UnitalCheck(False, str(exc))
    if graphs_isomorphic(ge, e) is None:
        return UnitalCheck(False, "first split is not isomorphic to E")
    if graphs_isomorphic(gf, f) is None:
        return UnitalCheck(False, "second split is not isomorphic to F")
    return UnitalCheck(True)
