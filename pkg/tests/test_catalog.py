import json

import pytest

from shiftequiv import catalog, equivalence as eq, ktheory
from shiftequiv.graph import small_graph_report

SPEC_AUX = {
    "F1_1": [[1, 1], [1, 0]], "F1_2": [[1, 1], [1, 1]], "F1_3": [[1, 1], [1, 2]], "F1_4": [[0, 2], [1, 0]],
    "F2_1": [[1, 2], [1, 0]], "F2_2": [[1, 1], [2, 0]], "F3_2": [[0, 1], [1, 2]], "F3_1": [[0, 1], [2, 2]],
    "R1_2": [[2]], "R1_3": [[3]],
}
SMALL_IDS = ([f"E1_{i}" for i in range(1, 19)] + [f"E2_{i}" for i in range(1, 7)]
             + [f"E3_{i}" for i in range(1, 5)] + ["E4_1", "E4_2", "E5_1", "E6_1", "E7_1", "E7_2"])


def test_entries():
    small = catalog.small_entries()
    assert sorted(e.id for e in small) == sorted(SMALL_IDS)
    for gid, m in SPEC_AUX.items():
        assert catalog.matrix(gid) == m
    e = catalog.get("E6_1")
    assert e.matrix == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert e.expected_k0 == "Z/2Z ⊕ Z/2Z" and e.expected_pf == "2"


def test_small_predicate_separates_entries():
    for e in catalog.load_catalog():
        assert small_graph_report(e.graph).is_small == (e.kind == "small")


def test_unknown_id():
    with pytest.raises(KeyError):
        catalog.get("nope")


def test_checksum_guards_data(tmp_path, monkeypatch):
    bad = tmp_path / "catalog.json"
    bad.write_text(catalog.DATA.read_text().replace('"E1_1"', '"E1_X"', 1))
    (tmp_path / "catalog.json.sha256").write_text(catalog.DATA.with_suffix(".json.sha256").read_text())
    monkeypatch.setattr(catalog, "DATA", bad)
    catalog.raw_data.cache_clear()
    try:
        with pytest.raises(catalog.CatalogError):
            catalog.raw_data()
    finally:
        monkeypatch.undo()
        catalog.raw_data.cache_clear()


def test_fixtures_agree():
    fixtures = catalog.load_fixtures()
    esse = [f for f in fixtures if isinstance(f.certificate, eq.EsseWitness) and f.expected]
    assert len(esse) >= 20
    for fx in fixtures:
        agree, res = catalog.check_fixture(fx)
        assert agree, (fx.case, fx.pair, fx.label, res.diagnostics)
    assert any(not f.expected for f in fixtures)


def test_case5_fixture_example():
    fx = next(f for f in catalog.load_fixtures() if f.pair == ("E1_13", "E1_16"))
    assert fx.certificate == eq.EsseWitness(((0, 0, 1), (0, 1, 0), (0, 1, 1)), ((0, 0, 1), (1, 0, 0), (0, 0, 1)))
    assert fx.expected and fx.case == 5


def test_printed_case7_witness_is_kept_and_fails():
    fx = next(f for f in catalog.load_fixtures() if f.case == 7 and f.printed is not None)
    assert not eq.verify(fx.printed, catalog.matrix("E1_8"), catalog.matrix("E1_12"))
    assert eq.verify(fx.certificate, catalog.matrix("E1_8"), catalog.matrix("E1_12"))


def test_case16_witnesses_need_reordered_f32():
    for fx in catalog.load_fixtures():
        if fx.case == 16 and fx.pair[1] == "F3_2r":
            assert not eq.verify(fx.certificate, catalog.matrix(fx.pair[0]), catalog.matrix("F3_2"))


@pytest.mark.parametrize("did", sorted(catalog.derivations()))
def test_derivations(did):
    assert catalog.run_derivation(did).ok


def test_meets_and_unital():
    for m in catalog.raw_data()["meets"]:
        assert catalog.run_meet(m) is not None
    for u in catalog.raw_data()["unital"]:
        assert catalog.run_unital(u).ok == u["expected"]


def test_pointed_systems():
    systems = catalog.pointed_systems()
    assert sorted(p["case"] for p in systems) == [5, 5, 5, 14, 14, 15, 16]
    for p in systems:
        out = catalog.run_pointed(p)
        assert out.verdict == p["expected"]
        if p.get("T"):
            assert str(p["T"]) in out.reason


def test_table_rows_and_discrepancies():
    rows, discrepancies, notes = catalog.table1_rows()
    assert len(rows) == 34
    assert all(r["k0_ok"] and r["kgr_ok"] for r in rows)
    flagged = sorted((d["id"], d["field"]) for d in discrepancies)
    assert flagged == [("E1_1", "pf"), ("E1_4", "pf")]
    e11 = next(d for d in discrepancies if d["id"] == "E1_1")
    assert e11["minpoly"] == [-1, 0, -1, 1] and e11["computed"] == "1.46557"
    assert [n["id"] for n in notes] == ["E1_2"]


def test_grouping_matches_table():
    ok, computed, printed = catalog.grouping_check()
    assert ok and len(computed) == 23


def test_kgr_via_reductions():
    assert catalog.kgr("E1_5").rendering == "Z^2"
    assert catalog.kgr("E2_4").rendering == "Z[1/2][1 1] ⊕ 0×Z"
    assert catalog.kgr("E1_6").rendering == "Z[1/2]"


def test_wrong_claim_fails_at_level_one():
    raw = catalog.raw_data()["wrong_delta_claim"]
    rep = ktheory.delta_claim_verify(catalog.matrix(raw["graph"]), ktheory.DeltaClaim.from_json(raw), 8)
    assert rep.first_failure == raw["expected_failure_level"] == 1


def test_data_is_canonical_json():
    text = catalog.DATA.read_text(encoding="utf-8")
    assert text == json.dumps(json.loads(text), indent=1, ensure_ascii=False, sort_keys=True) + "\n"
