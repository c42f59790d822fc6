"""Command-line front end.

Every command prints one JSON document (keys sorted, so output is
byte-deterministic) and exits with 0 found/verified, 1 refuted
unconditionally, 2 bounded or unknown, 3 input error.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import catalog, equivalence as eq, ktheory, linalg
from .algebraic import perron_root, round_decimal
from .graph import (
    AcyclicError,
    adjacency_matrix,
    graph_from_json,
    graph_from_matrix,
    is_irreducible,
    is_primitive,
    period,
    small_graph_report,
)

EXIT_OK, EXIT_REFUTED, EXIT_BOUNDED, EXIT_INPUT = 0, 1, 2, 3
VERDICT_EXIT = {eq.FOUND: EXIT_OK, eq.UNCONDITIONAL: EXIT_REFUTED, eq.BOUNDED: EXIT_BOUNDED}


class InputError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)
    exit_code: int = EXIT_OK
    timing: float = None

    def to_json(self):
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "discrepancies": self.discrepancies,
            "exit_code": self.exit_code,
        }
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if hasattr(o, "to_json"):
        return o.to_json()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=_default) + "\n"


# input resolution ----------------------------------------------------------


def _load_json(text):
    text = text.strip()
    if text.startswith(("[", "{")):
        return json.loads(text)
    path = Path(text)
    if not path.is_file():
        raise InputError(f"{text!r} is neither a catalog id, a JSON file nor inline JSON")
    return json.loads(path.read_text(encoding="utf-8"))


def resolve_graph(source):
    """Catalog id, path to a graph/matrix JSON file, or inline JSON."""
    try:
        return catalog.get(source).graph
    except KeyError:
        pass
    try:
        data = _load_json(source)
        if isinstance(data, dict) and "matrix" in data and "edges" not in data:
            return graph_from_matrix(data["matrix"])
        return graph_from_json(data)
    except InputError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad graph {source!r}: {exc}") from None


def resolve_matrix(source):
    return adjacency_matrix(resolve_graph(source))


def _int_list(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"expected integers, got {text!r}") from None


# commands ------------------------------------------------------------------


def cmd_invariants(args):
    g = resolve_graph(args.graph)
    a = adjacency_matrix(g)
    res = {
        "matrix": a,
        "small_graph": small_graph_report(g).to_json(),
        "k0": ktheory.k0_group(a).to_json(),
        "det": linalg.det(a),
    }
    try:
        res["period"] = period(a)
    except AcyclicError as exc:
        res["period"] = {"error": str(exc)}
    res["irreducible"] = is_irreducible(a)
    res["primitive"] = is_irreducible(a) and is_primitive(a)
    try:
        lam = perron_root(a)
        res["pf"] = {"decimal": round_decimal(lam, 5), "minpoly": list(lam.minpoly)}
    except ValueError as exc:
        res["pf"] = {"error": str(exc)}
    if args.graph in catalog.entries_by_id():
        res["kgr"] = catalog.kgr(args.graph, args.levels).to_json()
    else:
        res["kgr"] = ktheory.kgr_description(a, levels=args.levels).to_json()
    return RunReport("invariants", {"graph": args.graph}, res)


def cmd_esse(args):
    a, b = resolve_matrix(args.a), resolve_matrix(args.b)
    inputs = {"a": args.a, "b": args.b, "entries": args.entries, "inner": args.inner, "prune": not args.no_prune}
    try:
        out = eq.search_esse(a, b, args.entries, args.inner, prune=not args.no_prune)
    except eq.SearchBudgetExceeded as exc:
        return RunReport("esse", inputs, {"verdict": eq.BOUNDED, "error": str(exc)}, exit_code=EXIT_BOUNDED)
    res = out.to_json()
    if out.witnesses:
        res["certificate"] = out.witnesses[0].to_json()
    return RunReport("esse", inputs, res, exit_code=VERDICT_EXIT[out.verdict])


def cmd_sse(args):
    a, b = resolve_matrix(args.a), resolve_matrix(args.b)
    inputs = {"a": args.a, "b": args.b, "depth": args.depth, "size_bound": args.size_bound}
    try:
        out = eq.search_sse_path(a, b, args.depth, args.size_bound, args.entries)
    except eq.SearchBudgetExceeded as exc:
        return RunReport("sse", inputs, {"verdict": eq.BOUNDED, "error": str(exc), "stats": exc.stats},
                         exit_code=EXIT_BOUNDED)
    res = out.to_json()
    if out.chain is not None:
        res["certificate"] = out.chain.to_json()
        if out.chain.lag:
            res["se_witness"] = eq.sse_to_se(out.chain, a, b).to_json()
    return RunReport("sse", inputs, res, exit_code=VERDICT_EXIT[out.verdict])


def cmd_intertwiner(args):
    a, b = resolve_matrix(args.a), resolve_matrix(args.b)
    uf = _int_list(args.unit_from) if args.unit_from else None
    ut = _int_list(args.unit_to) if args.unit_to else None
    inputs = {
        "a": args.a, "b": args.b, "coeff_bound": args.coeff_bound, "pointed": args.pointed,
        "unimodular": args.unimodular, "cone": args.cone, "unit_from": uf, "unit_to": ut,
    }
    out = eq.search_intertwiner(a, b, args.pointed, args.unimodular, args.cone, args.coeff_bound, uf, ut)
    res = out.to_json()
    if out.witnesses:
        res["certificate"] = out.witnesses[0].to_json()
    return RunReport("intertwiner", inputs, res, exit_code=VERDICT_EXIT[out.verdict])


def cmd_verify(args):
    data = _load_json(args.certificate)
    if isinstance(data, dict) and "kind" not in data:
        # a report from a search command
        data = data.get("results", {}).get("certificate")
        if data is None:
            raise InputError("report carries no certificate")
    try:
        cert = eq.certificate_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad certificate: {exc}") from None
    a, b = resolve_matrix(args.a), resolve_matrix(args.b)
    res = eq.verify(cert, a, b)
    out = {"ok": res.ok, "diagnostics": list(res.diagnostics), "kind": data["kind"]}
    if isinstance(cert, eq.IntertwinerWitness):
        out["flags"] = eq.intertwiner_flags(a, b, cert.T, cert.unit_from, cert.unit_to)
    return RunReport("verify", {"certificate": args.certificate, "a": args.a, "b": args.b}, out,
                     exit_code=EXIT_OK if res.ok else EXIT_REFUTED)


def cmd_cone(args):
    a = resolve_matrix(args.graph)
    v = _int_list(args.v)
    if len(v) != len(a):
        raise InputError(f"vector has {len(v)} entries, matrix has {len(a)} rows")
    if args.k < 0:
        raise InputError("stage must be nonnegative")
    x = ktheory.dim_element(a, v, args.k)
    dec = ktheory.cone_contains(a, x, args.power_bound)
    code = {ktheory.IN: EXIT_OK, ktheory.OUT: EXIT_REFUTED}.get(dec.verdict, EXIT_BOUNDED)
    res = {"canonical": {"v": list(x.v), "k": x.k}, "decision": dec.to_json()}
    return RunReport("cone", {"graph": args.graph, "v": v, "k": args.k}, res, exit_code=code)


def cmd_delta(args):
    a = resolve_matrix(args.graph)
    if linalg.det(a) == 0:
        raise InputError("delta claims need det(A) != 0; reduce the graph first")
    if args.claim:
        claim = ktheory.DeltaClaim.from_json(_load_json(args.claim))
    else:
        try:
            claim = catalog.get(args.graph).delta_claim
        except KeyError:
            claim = None
        if claim is None:
            raise InputError(f"no claim registered for {args.graph}; pass --claim")
    rep = ktheory.delta_claim_verify(a, claim, args.levels)
    res = {"claim": claim.to_json(), "rendering": claim.render(), "report": rep.to_json()}
    return RunReport("delta", {"graph": args.graph, "levels": args.levels}, res,
                     exit_code=EXIT_OK if rep.ok else EXIT_REFUTED)


CSV_FIELDS = ["id", "group", "k0", "k0_expected", "k0_ok", "kgr", "kgr_expected", "kgr_ok", "pf", "pf_expected",
              "pf_ok", "pf_minpoly", "det", "is_small"]


def table_csv(rows):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "pf_minpoly": " ".join(map(str, r["pf_minpoly"]))})
    return buf.getvalue()


def regression_report():
    """Everything the catalog claims, recomputed.  Returns (results, discrepancies, all_ok)."""
    rows, discrepancies, notes = catalog.table1_rows()
    res = {"rows": rows, "notes": notes, "csv": table_csv(rows)}
    grouping_ok, computed, printed = catalog.grouping_check()
    res["grouping"] = {"ok": grouping_ok, "computed": computed, "printed": printed}
    ok = grouping_ok

    fixtures = []
    for fx in catalog.load_fixtures():
        agree, ver = catalog.check_fixture(fx)
        fixtures.append({"case": fx.case, "pair": list(fx.pair), "label": fx.label,
                         "kind": fx.certificate.to_json()["kind"], "expected": fx.expected,
                         "agrees": agree, "diagnostics": list(ver.diagnostics)})
        ok = ok and agree
    res["fixtures"] = fixtures

    ders = []
    for did in sorted(catalog.derivations()):
        d = catalog.run_derivation(did)
        ders.append({"id": did, "case": d.case, "ok": d.ok})
        ok = ok and d.ok
    res["derivations"] = ders
    meets = [{"case": m["case"], "ok": catalog.run_meet(m) is not None} for m in catalog.raw_data()["meets"]]
    unital = [{"case": u["case"], "ok": catalog.run_unital(u).ok} for u in catalog.raw_data()["unital"]]
    res["meets"], res["unital"] = meets, unital
    ok = ok and all(m["ok"] for m in meets + unital)

    pointed = []
    for p in catalog.pointed_systems():
        out = catalog.run_pointed(p)
        agree = out.verdict == p["expected"]
        pointed.append({"case": p["case"], "from": p["from"], "to": p["to"], "verdict": out.verdict,
                        "reason": out.reason, "expected": p["expected"], "agrees": agree})
        ok = ok and agree
    res["pointed_systems"] = pointed

    claims = {}
    for gid, raw in sorted(catalog.raw_data()["delta_claims"].items()):
        rep = ktheory.delta_claim_verify(catalog.matrix(gid), ktheory.DeltaClaim.from_json(raw), 8)
        claims[gid] = rep.ok
        ok = ok and rep.ok
    wrong = catalog.raw_data()["wrong_delta_claim"]
    wrong_rep = ktheory.delta_claim_verify(catalog.matrix(wrong["graph"]), ktheory.DeltaClaim.from_json(wrong), 8)
    res["delta_claims"] = {"verified": claims, "wrong_claim_first_failure": wrong_rep.first_failure}
    ok = ok and not wrong_rep.ok

    searches = {}
    s1 = eq.search_esse(catalog.matrix("E2_3"), catalog.matrix("E3_4"), 1)
    s2 = eq.search_esse(catalog.matrix("E2_3"), catalog.matrix("E2_4"), 1)
    s3 = eq.search_sse_path(catalog.matrix("E1_8"), catalog.matrix("E1_12"), 2, 4)
    s4 = eq.search_intertwiner(catalog.matrix("E1_12"), catalog.matrix("E1_8"), True, True, True)
    searches["esse E2_3 E3_4"] = {"verdict": s1.verdict, "count": len(s1.witnesses)}
    searches["esse E2_3 E2_4"] = {"verdict": s2.verdict, "count": len(s2.witnesses)}
    searches["sse E1_8 E1_12"] = {"verdict": s3.verdict, "lag": s3.chain.lag if s3.chain else None}
    searches["intertwiner E1_12 E1_8"] = {"verdict": s4.verdict, "count": len(s4.witnesses)}
    res["searches"] = searches
    ok = ok and (s1.verdict, s2.verdict, s3.verdict, s4.verdict) == (
        eq.FOUND, eq.UNCONDITIONAL, eq.FOUND, eq.FOUND)
    return res, discrepancies, ok


def cmd_table1(args):
    res, discrepancies, ok = regression_report()
    if args.csv:
        Path(args.csv).write_text(res["csv"], encoding="utf-8")
    return RunReport("table1", {}, res, discrepancies, EXIT_OK if ok else EXIT_REFUTED)


def cmd_catalog(args):
    if args.action == "list":
        items = [{"id": e.id, "kind": e.kind, "matrix": e.matrix, "aliases": list(e.aliases)}
                 for e in catalog.load_catalog()]
        return RunReport("catalog list", {}, {"entries": items})
    res, discrepancies, ok = regression_report()
    res.pop("csv")
    res["checksum_ok"] = True  # raw_data raises on a mismatch
    return RunReport("catalog verify", {}, res, discrepancies, EXIT_OK if ok else EXIT_REFUTED)


# parser --------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="shiftequiv", description="Shift equivalence toolkit for small graphs.")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="small-graph report, K_0, K_0^gr, PF eigenvalue, period")
    s.add_argument("graph")
    s.add_argument("--levels", type=int, default=8)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("esse", help="search for A = RS, B = SR")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--entries", type=int, default=1, help="entry bound m")
    s.add_argument("--inner", type=int, nargs="*", default=None, help="inner dimensions c")
    s.add_argument("--no-prune", action="store_true")
    s.set_defaults(func=cmd_esse)

    s = sub.add_parser("sse", help="search for a chain of splits and amalgamations")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--size-bound", type=int, default=4)
    s.add_argument("--entries", type=int, default=None, help="entry bound on intermediate matrices")
    s.set_defaults(func=cmd_sse)

    s = sub.add_parser("intertwiner", help="search for integer T with A T = T B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--coeff-bound", type=int, default=3)
    s.add_argument("--pointed", action="store_true")
    s.add_argument("--unimodular", action="store_true")
    s.add_argument("--cone", action="store_true")
    s.add_argument("--unit-from", default=None, help="order unit of A, e.g. '2,1'")
    s.add_argument("--unit-to", default=None, help="order unit of B")
    s.set_defaults(func=cmd_intertwiner)

    s = sub.add_parser("verify", help="check a certificate (or a search report) for a pair")
    s.add_argument("certificate", help="JSON file or inline JSON")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cone", help="decide whether [v, k] lies in the positive cone")
    s.add_argument("graph")
    s.add_argument("--v", required=True, help="integer vector, e.g. '1,-1,0'")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--power-bound", type=int, default=ktheory.DEFAULT_POWER_BOUND)
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("delta", help="verify a description of the dimension group")
    s.add_argument("graph")
    s.add_argument("--claim", default=None, help='JSON {"d": 2, "w": [...], "free_part": [...]}')
    s.add_argument("--levels", type=int, default=8)
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("table1", help="full regression report for the 34 small graphs")
    s.add_argument("--csv", default=None, help="also write the table as CSV to this path")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("catalog", help="list the catalog or re-derive everything in it")
    s.add_argument("action", choices=["list", "verify"])
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (InputError, json.JSONDecodeError, ktheory.MatrixMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.timing:
        report.timing = time.perf_counter() - start
    sys.stdout.write(dumps(report.to_json()))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
