import pytest
from hypothesis import given, strategies as st

from shiftequiv import equivalence as eq, linalg, moves
from shiftequiv.catalog import get, matrix
from shiftequiv.graph import adjacency_matrix, graph_from_matrix, graphs_isomorphic


def g(gid):
    return get(gid).graph


def iso(a, b):
    return graphs_isomorphic(a, b) is not None


def test_maximal_out_split_f11():
    f = g("F1_1")
    assert iso(moves.out_split(f, "w1", moves.maximal_out_partition(f, "w1")), g("E1_5"))


def test_single_part_splits_are_identity():
    e = g("E1_8")
    outs = [x[0] for x in e.out_edges("v3")]
    assert iso(moves.out_split(e, "v3", [outs]), e)
    ins = [x[0] for x in e.in_edges("v1")]
    assert iso(moves.in_split(e, "v1", [ins]), e)


def test_case7_meeting_graph():
    a = moves.out_split(g("E1_8"), "v3", [["e", "f"], ["g"]])
    b = moves.in_split(g("E1_12"), "v1", [["f"], ["e", "g"]])
    assert iso(a, g("x4-A")) and iso(b, g("x4-A"))


def test_generalized_in_split_example():
    b = moves.gen_in_split(g("E1_12"), "v1", [[], ["f", "e", "g"]])
    assert iso(b, g("x4-F4_1"))
    assert iso(b, moves.source_add(g("E1_12"), ["v1", "v2", "v3"]))


def test_source_moves():
    f = g("F1_1")
    assert iso(moves.source_add(f, ["w2"]), g("E1_13"))
    assert iso(moves.source_add(f, ["w1", "w2"]), g("E1_16"))
    h = moves.source_add(f, ["w1"])
    assert iso(moves.source_eliminate(h, "s"), f)
    with pytest.raises(moves.MoveError):
        moves.source_eliminate(f, "w1")


def test_bad_partitions():
    f = g("F1_1")
    outs = [x[0] for x in f.out_edges("w1")]
    with pytest.raises(moves.MoveError):
        moves.out_split(f, "w1", [outs, []])
    with pytest.raises(moves.MoveError):
        moves.out_split(f, "w1", [outs[:1]])
    with pytest.raises(moves.MoveError):
        moves.in_split(f, "w1", moves.SplitSpec("w1", [[]], allow_empty_parts=True))


def test_split_witness_case5():
    f = g("F1_1")
    rec = moves.make_record(f, moves.OUT_SPLIT, moves.SplitSpec("w1", moves.maximal_out_partition(f, "w1")))
    r, s = rec.esse_witness
    assert linalg.mat_mul(r, s) == adjacency_matrix(f)
    assert linalg.mat_mul(s, r) == adjacency_matrix(rec.output)
    # the reverse witness maps E1_5's unit (1,1,1) to (2,1)
    assert eq.unit_transfer(adjacency_matrix(rec.output), adjacency_matrix(f), s) == (2, 1)


def test_trivial_split_witness():
    e = g("E1_8")
    outs = [x[0] for x in e.out_edges("v3")]
    rec = moves.make_record(e, moves.OUT_SPLIT, moves.SplitSpec("v3", [outs]))
    r, s = rec.esse_witness
    assert [list(x) for x in r] == linalg.identity(3)
    assert [list(x) for x in s] == matrix("E1_8")


def test_case7_witness_dimensions():
    rec = moves.make_record(g("E1_8"), moves.OUT_SPLIT, moves.SplitSpec("v3", [["e", "f"], ["g"]]))
    r, s = rec.esse_witness
    assert linalg.shape(r) == (3, 4) and linalg.shape(s) == (4, 3)
    assert eq.verify(eq.EsseWitness(r, s), matrix("E1_8"), adjacency_matrix(rec.output))


def _random_partition(items, rng_bits, parts):
    out = [[] for _ in range(parts)]
    for it, b in zip(items, rng_bits):
        out[b % parts].append(it)
    return out


mats = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=n, max_size=n))


@given(mats, st.data())
def test_random_splits_induce_esse(m, data):
    gr = graph_from_matrix(m)
    v = data.draw(st.sampled_from(gr.vertices))
    outs = [e[0] for e in gr.out_edges(v)]
    if outs:
        n = data.draw(st.integers(1, len(outs)))
        bits = data.draw(st.lists(st.integers(0, n - 1), min_size=len(outs), max_size=len(outs)))
        part = [p for p in _random_partition(outs, bits, n) if p]
        rec = moves.make_record(gr, moves.OUT_SPLIT, moves.SplitSpec(v, part))
        assert eq.verify(eq.EsseWitness(*rec.esse_witness), m, adjacency_matrix(rec.output))
        assert len(rec.output.edges) == sum(map(sum, m)) + (len(part) - 1) * sum(r[gr.index(v)] for r in m)
    ins = [e[0] for e in gr.in_edges(v)]
    if ins and outs:
        n = data.draw(st.integers(1, len(ins) + 1))
        bits = data.draw(st.lists(st.integers(0, n - 1), min_size=len(ins), max_size=len(ins)))
        part = _random_partition(ins, bits, n)
        rec = moves.make_record(gr, moves.GEN_IN_SPLIT, moves.SplitSpec(v, part, True))
        assert eq.verify(eq.EsseWitness(*rec.esse_witness), m, adjacency_matrix(rec.output))


def test_unital_in_split_examples():
    ok = moves.unital_in_split_check(g("E1_7"), g("E1_17"), g("F1_2"), "w1",
                                     [("w1->w1:1",), ("w2->w1:1",)], [(), ("w1->w1:1", "w2->w1:1")])
    assert ok.ok
    e = g("E1_7")
    part = [tuple(x[0] for x in g("F1_2").in_edges("w1"))]
    assert moves.unital_in_split_check(e, e, g("F1_2"), "w1", part, part).ok is False  # E1_7 is not F1_2
    f = g("F1_2")
    assert moves.unital_in_split_check(f, f, f, "w1", part, part).ok
    bad = moves.unital_in_split_check(g("E1_5"), g("E1_13"), g("F1_1"), "w1", [("a",)], [(), ("a",)])
    assert not bad.ok and "different numbers" in bad.reason


def test_record_replay_and_json():
    rec = moves.make_record(g("F1_1"), moves.OUT_SPLIT, moves.SplitSpec("w1", [["w1->w1:1"], ["w1->w2:1"]]))
    assert rec.replay() == rec.output
    js = rec.to_json()
    assert js["kind"] == moves.OUT_SPLIT and js["spec"]["vertex"] == "w1"
