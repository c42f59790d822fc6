from itertools import product

import pytest
from hypothesis import given, strategies as st

from shiftequiv import algebraic as alg, equivalence as eq, linalg
from shiftequiv.catalog import load_fixtures, matrix

R14 = ((0, 0, 1), (1, 0, 0), (1, 1, 0))
S14 = ((1, 0, 1), (0, 1, 0), (0, 1, 0))


def test_verify_examples():
    w = eq.EsseWitness(((0, 0, 1), (1, 0, 0), (0, 0, 1)), ((0, 0, 1), (0, 1, 0), (1, 1, 0)))
    assert eq.verify(w, matrix("E1_5"), matrix("E1_13"))
    a = matrix("E1_8")
    assert eq.verify(eq.EsseWitness(linalg.freeze(a), linalg.freeze(linalg.identity(3))), a, a)
    assert eq.verify(eq.EsseWitness(R14, S14), matrix("E2_3"), matrix("E3_4"))


def test_verify_diagnostics():
    res = eq.verify(eq.EsseWitness(S14, R14), matrix("E2_3"), matrix("E3_4"))
    assert not res.ok and res.diagnostics
    neg = eq.EsseWitness(((-1,),), ((-2,),))
    assert not eq.verify(neg, [[2]], [[2]]).ok


def test_search_esse_known_solution():
    out = eq.search_esse(matrix("E2_3"), matrix("E3_4"), 1)
    assert out.verdict == eq.FOUND
    assert eq.EsseWitness(R14, S14) in out.witnesses


def test_search_esse_empty_is_unconditional():
    out = eq.search_esse(matrix("E2_3"), matrix("E2_4"), 1)
    assert out.witnesses == () and out.verdict == eq.UNCONDITIONAL
    assert out.forced_bound == (1, 1)


def test_forced_bounds_are_sound():
    # every solution with larger entries respects the forced bounds
    a, b = [[2, 1], [1, 1]], [[2, 1], [1, 1]]
    rb, sb = eq.forced_entry_bounds(a, b)
    for w in eq.search_esse(a, b, 3).witnesses:
        assert linalg.max_entry(w.R) <= rb and linalg.max_entry(w.S) <= sb


def test_bounded_when_bounds_not_forced():
    out = eq.search_esse([[0, 0], [0, 1]], [[1]], 1)
    assert out.verdict in (eq.FOUND, eq.BOUNDED)
    out = eq.search_esse([[0, 0], [1, 0]], [[0, 1], [0, 0]], 0)
    assert out.verdict == eq.BOUNDED


def test_search_contains_identity_pair():
    a = [[1, 1], [1, 0]]
    out = eq.search_esse(a, a, 1)
    assert eq.EsseWitness(linalg.freeze(a), linalg.freeze(linalg.identity(2))) in out.witnesses


AUX2 = ["F1_1", "F1_2", "F1_3", "F1_4", "F2_1", "F2_2", "F3_1", "F3_2", "F3_2r"]


@pytest.mark.parametrize("x,y", [(x, y) for x in AUX2 for y in AUX2 if x <= y])
def test_pruned_equals_unpruned(x, y):
    a, b = matrix(x), matrix(y)
    for m in (1, 2):
        p = eq.search_esse(a, b, m, prune=True)
        u = eq.search_esse(a, b, m, prune=False)
        assert p.witnesses == u.witnesses and p.verdict == u.verdict


def _brute_esse(a, b, m):
    r, c = len(a), len(b)
    out = set()
    for fr in product(range(m + 1), repeat=r * c):
        rm = [list(fr[i * c:(i + 1) * c]) for i in range(r)]
        for fs in product(range(m + 1), repeat=r * c):
            sm = [list(fs[i * r:(i + 1) * r]) for i in range(c)]
            if linalg.mat_mul(rm, sm) == a and linalg.mat_mul(sm, rm) == b:
                out.add((linalg.freeze(rm), linalg.freeze(sm)))
    return out


@given(st.lists(st.integers(0, 2), min_size=4, max_size=4), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_search_esse_against_brute_force(fa, fb):
    a, b = [fa[:2], fa[2:]], [fb[:2], fb[2:]]
    got = {(w.R, w.S) for w in eq.search_esse(a, b, 1).witnesses}
    assert got == _brute_esse(a, b, 1)


def test_budget_is_enforced():
    with pytest.raises(eq.SearchBudgetExceeded):
        eq.search_esse(matrix("E2_3"), matrix("E3_4"), 3, budget=1000)


def test_sse_path_case7():
    out = eq.search_sse_path(matrix("E1_8"), matrix("E1_12"), 2, 4)
    assert out.verdict == eq.FOUND and out.chain.lag == 2
    assert eq.verify(out.chain, matrix("E1_8"), matrix("E1_12"))
    se = eq.sse_to_se(out.chain, matrix("E1_8"), matrix("E1_12"))
    assert se.lag == 2 and eq.verify(se, matrix("E1_8"), matrix("E1_12"))
    # the intermediate graph is the 4-vertex graph A (up to isomorphism)
    from shiftequiv.graph import matrices_isomorphic

    mid = linalg.mat_mul(out.chain.steps[0].S, out.chain.steps[0].R)
    assert matrices_isomorphic(mid, matrix("x4-A")) is not None


def test_sse_trivial_and_single_step():
    a = matrix("E1_8")
    out = eq.search_sse_path(a, a)
    assert out.chain.lag == 0
    out = eq.search_sse_path(matrix("F1_1"), matrix("E1_5"), 1, 3)
    assert out.verdict == eq.FOUND and out.chain.lag == 1
    assert eq.verify(out.chain, matrix("F1_1"), matrix("E1_5"))


def test_sse_bounded_when_nothing_found():
    out = eq.search_sse_path(matrix("E2_3"), matrix("E1_8"), 1, 3)
    assert out.verdict == eq.BOUNDED and out.chain is None


def test_sse_to_se_edge_cases():
    with pytest.raises(ValueError, match="lag must be"):
        eq.sse_to_se(eq.SseChain(()))
    w = eq.EsseWitness(R14, S14)
    se = eq.sse_to_se(eq.SseChain((w,)))
    assert (se.R, se.S, se.lag) == (R14, S14, 1)


def test_case14_composition():
    fx = next(f for f in load_fixtures() if f.case == 14 and isinstance(f.certificate, eq.SseChain))
    se = eq.sse_to_se(fx.certificate, matrix("E2_3"), matrix("E2_4"))
    assert se.lag == 2 and eq.verify(se, matrix("E2_3"), matrix("E2_4"))


def test_se_verify_catches_bad_lag():
    a = matrix("E2_3")
    w = eq.SeWitness(linalg.freeze(a), linalg.freeze(linalg.identity(3)), 2)
    assert not eq.verify(w, a, a)


def test_intertwiner_case7():
    out = eq.search_intertwiner(matrix("E1_12"), matrix("E1_8"), True, True, True)
    assert out.verdict == eq.FOUND
    ts = [w.T for w in out.witnesses]
    assert ((0, 0, 1), (-1, 0, 1), (2, 1, -1)) in ts
    w = out.witnesses[ts.index(((0, 0, 1), (-1, 0, 1), (2, 1, -1)))]
    assert w.unimodular and w.pointed and w.cone_preserving


def test_intertwiner_case5_unique_candidate():
    f = matrix("F1_1")
    out = eq.search_intertwiner(f, f, True, True, False, unit_from=(2, 1), unit_to=(2, 2))
    assert out.verdict == eq.UNCONDITIONAL and "[[0, 2], [2, -2]]" in out.reason
    assert linalg.det([[0, 2], [2, -2]]) == -4


def test_intertwiner_identity():
    a = matrix("E1_8")
    out = eq.search_intertwiner(a, a, True, True, False)
    assert tuple(map(tuple, linalg.identity(3))) in [w.T for w in out.witnesses]


def test_cone_preserving_independent():
    # T z_B must be parallel to z_A; check numerically with the float eigenvectors
    a, b = matrix("E1_12"), matrix("E1_8")
    t = [[0, 0, 1], [-1, 0, 1], [2, 1, -1]]
    za, zb = alg.pf_data(a).z_float(), alg.pf_data(b).z_float()
    tz = [sum(t[i][j] * zb[j] for j in range(3)) for i in range(3)]
    ratio = [x / y for x, y in zip(tz, za)]
    assert max(ratio) - min(ratio) < 1e-9 and ratio[0] > 0
    assert eq.cone_preserving(a, b, t)
    assert not eq.cone_preserving(a, b, [[-x for x in r] for r in t])


def test_unit_transfer_examples():
    r1 = ((1, 0), (0, 1), (1, 0))
    assert eq.unit_transfer(matrix("E1_5"), matrix("F1_1"), r1) == (2, 1)
    r2 = ((1, 0), (0, 1), (1, 1))
    assert eq.unit_transfer(matrix("E1_13"), matrix("F1_1"), r2) == (2, 2)
    assert eq.unit_transfer(matrix("E1_8"), matrix("E1_8"), linalg.freeze(linalg.identity(3))) == (1, 1, 1)


def test_certificate_json_round_trip():
    for fx in load_fixtures():
        js = fx.certificate.to_json()
        back = eq.certificate_from_json(js)
        assert back.to_json() == js


def test_symmetry_of_fixtures():
    for fx in load_fixtures():
        if isinstance(fx.certificate, eq.EsseWitness) and fx.expected:
            a, b = matrix(fx.pair[0]), matrix(fx.pair[1])
            assert eq.verify(fx.certificate.reversed(), b, a)
