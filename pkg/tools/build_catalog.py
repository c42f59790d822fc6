"""Regenerate src/shiftequiv/data/catalog.json and its checksum.

The data below is transcribed from the small-graph classification: the 34
small graphs, the auxiliary graphs used to reduce them, the K-theory table
as printed, and every explicit witness.  Run from the repository root.
"""

import hashlib
import json
from pathlib import Path

OUT = Path("src/shiftequiv/data/catalog.json")

SMALL = {
    "E1_1": [[0, 1, 0], [0, 0, 1], [1, 0, 1]],
    "E1_2": [[1, 1, 0], [0, 0, 1], [1, 0, 1]],
    "E1_3": [[1, 1, 0], [0, 1, 1], [1, 0, 1]],
    "E1_4": [[0, 1, 0], [0, 0, 1], [1, 1, 0]],
    "E1_5": [[1, 1, 0], [0, 0, 1], [1, 1, 0]],
    "E1_6": [[1, 1, 0], [0, 0, 1], [1, 1, 1]],
    "E1_7": [[1, 1, 0], [0, 1, 1], [1, 1, 0]],
    "E1_8": [[1, 1, 0], [1, 0, 1], [1, 1, 1]],
    "E1_9": [[1, 1, 0], [1, 1, 1], [1, 1, 1]],
    "E1_10": [[0, 1, 1], [1, 0, 0], [1, 0, 0]],
    "E1_11": [[0, 1, 1], [1, 0, 0], [1, 0, 1]],
    "E1_12": [[1, 1, 1], [1, 0, 0], [1, 0, 1]],
    "E1_13": [[0, 0, 1], [1, 0, 0], [1, 0, 1]],
    "E1_14": [[1, 0, 1], [1, 0, 0], [1, 0, 0]],
    "E1_15": [[1, 0, 1], [1, 0, 0], [1, 0, 1]],
    "E1_16": [[0, 1, 1], [0, 0, 1], [0, 1, 1]],
    "E1_17": [[0, 1, 1], [0, 1, 1], [0, 1, 1]],
    "E1_18": [[1, 1, 0], [0, 1, 1], [1, 1, 1]],
    "E2_1": [[0, 1, 0], [0, 1, 1], [1, 1, 1]],
    "E2_2": [[0, 1, 0], [1, 0, 1], [1, 1, 0]],
    "E2_3": [[0, 1, 0], [1, 0, 1], [1, 1, 1]],
    "E2_4": [[1, 1, 0], [1, 0, 1], [1, 1, 0]],
    "E2_5": [[0, 1, 0], [0, 1, 1], [1, 1, 0]],
    "E2_6": [[1, 1, 0], [1, 1, 1], [1, 1, 0]],
    "E3_1": [[0, 1, 0], [0, 0, 1], [1, 1, 1]],
    "E3_2": [[0, 1, 0], [1, 1, 1], [1, 1, 1]],
    "E3_3": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
    "E3_4": [[1, 1, 1], [1, 0, 0], [1, 0, 0]],
    "E4_1": [[0, 1, 0], [1, 1, 1], [1, 1, 0]],
    "E4_2": [[1, 1, 1], [1, 1, 1], [1, 1, 0]],
    "E5_1": [[1, 1, 1], [1, 0, 1], [1, 1, 0]],
    "E6_1": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
    "E7_1": [[0, 1, 1], [1, 1, 0], [1, 0, 1]],
    "E7_2": [[1, 1, 1], [1, 1, 0], [1, 0, 1]],
}

# Table rows: (members, K0, Kgr, printed PF, value of the printed PF)
TABLE = [
    (["E1_1"], "{0̄}", "Z^3", "1.46667", "1.46667"),
    (["E1_2"], "{0̄}", "Z^3", "1.75448", "1.75448"),
    (["E1_3"], "{0̄}", "Z[1/2][1 1 1] ⊕ 0×Z^2", "2", "2"),
    (["E1_4"], "{0̄}", "Z^3", "1.46557", "1.46557"),
    (["E1_5", "E1_13", "E1_14", "E1_16"], "{0̄}", "Z^2", "½(1+√5)", "1.6180339887"),
    (["E1_6", "E1_7", "E1_15", "E1_17"], "{0̄}", "Z[1/2]", "2", "2"),
    (["E1_8", "E1_12"], "{0̄}", "Z^3", "2.24698", "2.24698"),
    (["E1_9"], "{0̄}", "Z^2", "½(3+√5)", "2.6180339887"),
    (["E1_10"], "{0̄}", "(Z[1/2])^2", "√2", "1.4142135624"),
    (["E1_11"], "{0̄}", "Z^3", "1.80194", "1.80194"),
    (["E1_18"], "{0̄}", "Z^3", "2.32472", "2.32472"),
    (["E2_1"], "Z/2Z", "Z^3", "2.20557", "2.20557"),
    (["E2_2"], "Z/2Z", "Z^3", "½(1+√5)", "1.6180339887"),
    (["E2_3", "E2_4", "E3_4"], "Z/2Z", "Z[1/2][1 1] ⊕ 0×Z", "2", "2"),
    (["E2_5", "E3_1"], "Z/2Z", "Z^3", "1.83929", "1.83929"),
    (["E2_6", "E3_2"], "Z/2Z", "Z^2", "1+√2", "2.4142135624"),
    (["E3_3"], "Z/2Z", "Z[1/3]", "3", "3"),
    (["E4_1"], "Z/3Z", "Z^3", "2.1479", "2.1479"),
    (["E4_2"], "Z/3Z", "(Z[1/2])^2", "1+√3", "2.7320508076"),
    (["E5_1"], "Z/4Z", "Z^3", "1+√2", "2.4142135624"),
    (["E6_1"], "Z/2Z ⊕ Z/2Z", "Z[1/2][1 1 1] ⊕ 0×Z^2", "2", "2"),
    (["E7_1"], "Z", "Z[1/2][1 1 1] ⊕ 0×Z^2", "2", "2"),
    (["E7_2"], "Z", "Z^3", "1+√2", "2.4142135624"),
]

V = ["v1", "v2", "v3"]
W = ["w1", "w2"]


def plain(m, names):
    return {"vertices": names, "edges": [[names[i], names[j]] for i in range(len(m))
                                         for j in range(len(m)) for _ in range(m[i][j])]}


def labelled(names, edges):
    return {"vertices": names, "edges": edges}


GRAPHS = {}
for gid, m in SMALL.items():
    GRAPHS[gid] = plain(m, V)

# case 7: labels on the edges out of v3 in E1_8 and into v1 in E1_12
GRAPHS["E1_8"] = labelled(V, [
    ["v1", "v1"], ["v1", "v2"], ["v2", "v1"], ["v2", "v3"],
    ["v3", "v1", "f"], ["v3", "v2", "g"], ["v3", "v3", "e"],
])
GRAPHS["E1_12"] = labelled(V, [
    ["v1", "v1", "f"], ["v1", "v2"], ["v1", "v3"], ["v2", "v1", "g"],
    ["v3", "v1", "e"], ["v3", "v3"],
])

AUX = {
    "F1_1": plain([[1, 1], [1, 0]], W),
    "F1_2": plain([[1, 1], [1, 1]], W),
    "F1_3": labelled(W, [["w1", "w1"], ["w1", "w2"], ["w2", "w1", "e"],
                         ["w2", "w2", "f"], ["w2", "w2", "g"]]),
    "F1_4": plain([[0, 2], [1, 0]], W),
    "F2_1": labelled(W, [["w1", "w1", "e"], ["w1", "w2", "f"], ["w1", "w2", "g"], ["w2", "w1"]]),
    "F2_2": labelled(W, [["w1", "w1", "e"], ["w1", "w2"], ["w2", "w1", "f"], ["w2", "w1", "g"]]),
    "F3_2": labelled(W, [["w1", "w2", "e"], ["w2", "w1", "h"], ["w2", "w2", "f"], ["w2", "w2", "g"]]),
    # F3_2 listed as (w2, w1): the frame the printed R_1, S_1, R_2, S_2 use
    "F3_2r": labelled(["w2", "w1"], [["w1", "w2", "e"], ["w2", "w1", "h"], ["w2", "w2", "f"], ["w2", "w2", "g"]]),
    "F3_1": labelled(W, [["w1", "w2"], ["w2", "w1", "e"], ["w2", "w1", "h"],
                         ["w2", "w2", "f"], ["w2", "w2", "g"]]),
    "R1_2": plain([[2]], ["w1"]),
    "R1_3": plain([[3]], ["w1"]),
    # larger intermediates, ids prefixed to keep them apart from the 2-vertex graphs
    "x4-A": plain([[1, 1, 1, 0], [0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 1, 0]], ["a1", "a2", "a3", "a4"]),
    "x4-F4_1": plain([[1, 1, 1, 0], [1, 0, 0, 0], [1, 0, 1, 0], [1, 1, 1, 0]], ["v1", "v2", "v3", "s"]),
    "x4-F3_1": plain([[1, 1, 1, 0, 0, 0], [1, 0, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0],
                      [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]],
                     ["v1", "v2", "v3", "s1", "s2", "s3"]),
    "x4-F2_1": plain([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 1, 1]], ["v1a", "v1b", "v2", "v3"]),
}
ALIASES = {
    "F3_2r": ["F^3_2 with vertices ordered (w2, w1)"],
    "x4-A": ["A (case 7)"],
    "x4-F4_1": ["B (example of generalised in-splits)", "F^4_1 (case 7)"],
    "x4-F3_1": ["F^3_1 (case 7)"],
    "x4-F2_1": ["F^2_1 / F^1_2 (case 5)"],
}

DELTA = {
    "E1_3": {"d": 2, "w": [1, 1, 1], "free_part": [[0, 1, 0], [0, 0, 1]]},
    "E6_1": {"d": 2, "w": [1, 1, 1], "free_part": [[0, 1, 0], [0, 0, 1]]},
    "E7_1": {"d": 2, "w": [1, 1, 1], "free_part": [[0, 1, 0], [0, 0, 1]]},
    "F2_1": {"d": 2, "w": [1, 1], "free_part": [[0, 1]]},
    "F3_1": {"d": 2, "w": [[1, 0], [0, 1]], "free_part": []},
    "F1_4": {"d": 2, "w": [[1, 0], [0, 1]], "free_part": []},
    "R1_2": {"d": 2, "w": [1], "free_part": []},
    "R1_3": {"d": 3, "w": [1], "free_part": []},
}
WRONG_DELTA = {"graph": "E1_3", "d": 3, "w": [1, 1, 1], "free_part": [[0, 1, 0], [0, 0, 1]],
               "expected_failure_level": 1}


def mv(kind, vertex=None, partition=None, targets=None):
    out = {"kind": kind}
    if vertex is not None:
        out["vertex"] = vertex
    if partition is not None:
        out["partition"] = partition
    if targets is not None:
        out["targets"] = targets
    return out


# each derivation: start graph, moves, and the catalog graph the result is isomorphic to
DERIVATIONS = [
    ("E1_5<-F1_1", 5, "F1_1", [mv("out_split", "w1", "maximal")], "E1_5"),
    ("E1_13<-F1_1", 5, "F1_1", [mv("source_add", targets=["w2"])], "E1_13"),
    ("E1_14<-F1_1", 5, "F1_1", [mv("source_add", targets=["w1"])], "E1_14"),
    ("E1_16<-F1_1", 5, "F1_1", [mv("source_add", targets=["w1", "w2"])], "E1_16"),
    ("x4-F2_1<-E1_16", 5, "E1_16", [mv("out_split", "v1", "maximal")], "x4-F2_1"),
    ("E1_6<-F1_2", 6, "F1_2", [mv("out_split", "w1", "maximal")], "E1_6"),
    ("E1_7<-F1_2", 6, "F1_2", [mv("in_split", "w1", "maximal")], "E1_7"),
    ("E1_15<-F1_2", 6, "F1_2", [mv("source_add", targets=["w1"])], "E1_15"),
    ("E1_17<-F1_2", 6, "F1_2", [mv("source_add", targets=["w1", "w2"])], "E1_17"),
    ("E1_17<-F1_2 gen", 6, "F1_2", [mv("gen_in_split", "w1", [[], ["w1->w1:1", "w2->w1:1"]])], "E1_17"),
    ("F1_2<-R1_2", 6, "R1_2", [mv("out_split", "w1", "maximal")], "F1_2"),
    ("x4-A<-E1_8", 7, "E1_8", [mv("out_split", "v3", [["e", "f"], ["g"]])], "x4-A"),
    ("x4-A<-E1_12", 7, "E1_12", [mv("in_split", "v1", [["f"], ["e", "g"]])], "x4-A"),
    ("x4-F4_1<-E1_12", 7, "E1_12", [mv("gen_in_split", "v1", [[], ["f", "e", "g"]])], "x4-F4_1"),
    ("x4-F4_1<-E1_12 source", 7, "E1_12", [mv("source_add", targets=["v1", "v2", "v3"])], "x4-F4_1"),
    ("x4-F3_1<-x4-F4_1", 7, "x4-F4_1", [mv("out_split", "s", "maximal")], "x4-F3_1"),
    ("E1_9<-F1_3", 8, "F1_3", [mv("out_split", "w2", [["f"], ["e", "g"]])], "E1_9"),
    ("E1_10<-F1_4", 9, "F1_4", [mv("out_split", "w1", "maximal")], "E1_10"),
    ("E2_3<-F2_1", 14, "F2_1", [mv("out_split", "w1", [["e", "f"], ["g"]])], "E2_3"),
    ("E2_4<-F2_2", 14, "F2_2", [mv("in_split", "w1", [["e", "f"], ["g"]])], "E2_4"),
    ("E3_4<-F2_1", 14, "F2_1", [mv("in_split", "w2", "maximal")], "E3_4"),
    ("E3_4<-F2_2", 14, "F2_2", [mv("out_split", "w2", "maximal")], "E3_4"),
    ("E2_6<-F3_2", 16, "F3_2", [mv("out_split", "w2", [["h", "f"], ["g"]])], "E2_6"),
    ("E3_2<-F3_2", 16, "F3_2", [mv("in_split", "w2", [["e", "f"], ["g"]])], "E3_2"),
    ("E3_3<-R1_3", 17, "R1_3", [mv("out_split", "w1", "maximal")], "E3_3"),
    ("E4_2<-F3_1", 19, "F3_1", [mv("out_split", "w2", [["e", "g"], ["f", "h"]])], "E4_2"),
]
# same graph reached from both ends (case 15)
MEETS = [
    {"case": 15, "left": ["E2_5", [mv("out_split", "v3", "maximal")]],
     "right": ["E3_1", [mv("in_split", "v2", "maximal")]]},
]
UNITAL = [
    {"case": 6, "E": "E1_7", "F": "E1_17", "G": "F1_2", "w": "w1",
     "part_E": [["w1->w1:1"], ["w2->w1:1"]], "part_F": [[], ["w1->w1:1", "w2->w1:1"]], "expected": True},
    {"case": 7, "E": "x4-A", "F": "x4-F4_1", "G": "E1_12", "w": "v1",
     "part_E": [["f"], ["e", "g"]], "part_F": [[], ["f", "e", "g"]], "expected": True},
]
# K^gr of det-0 graphs: the derivation used, from a graph whose K^gr is known
REDUCTIONS = {
    "E1_5": "E1_5<-F1_1", "E1_13": "E1_13<-F1_1", "E1_14": "E1_14<-F1_1", "E1_16": "E1_16<-F1_1",
    "E1_6": "E1_6<-F1_2", "E1_7": "E1_7<-F1_2", "E1_15": "E1_15<-F1_2", "E1_17": "E1_17<-F1_2",
    "F1_2": "F1_2<-R1_2", "E1_9": "E1_9<-F1_3", "E1_10": "E1_10<-F1_4",
    "E2_3": "E2_3<-F2_1", "E2_4": "E2_4<-F2_2", "E3_4": "E3_4<-F2_1",
    "E2_6": "E2_6<-F3_2", "E3_2": "E3_2<-F3_2", "E3_3": "E3_3<-R1_3", "E4_2": "E4_2<-F3_1",
}
# F2_2 itself has det 0; it reaches F2_1 through E3_4
REDUCTIONS_VIA_ESSE = {"F2_2": "F2_1"}


def esse(case, a, b, r, s, label="", note="", unit=None, printed=None):
    out = {"case": case, "kind": "esse", "pair": [a, b], "R": r, "S": s, "expected": True}
    if label:
        out["label"] = label
    if note:
        out["note"] = note
    if unit is not None:
        out["unit_image"] = unit
    if printed is not None:
        out["printed"] = printed
    return out


FIXTURES = [
    esse(5, "E1_5", "E1_13", [[0, 0, 1], [1, 0, 0], [0, 0, 1]], [[0, 0, 1], [0, 1, 0], [1, 1, 0]]),
    esse(5, "E1_5", "E1_14", [[1, 0, 0], [0, 0, 1], [1, 0, 0]], [[1, 1, 0], [0, 0, 1], [0, 0, 1]]),
    esse(5, "E1_5", "E1_16", [[0, 0, 1], [0, 1, 0], [0, 0, 1]], [[0, 1, 1], [0, 0, 1], [1, 1, 0]]),
    esse(5, "E1_13", "E1_14", [[1, 0, 0], [0, 0, 1], [1, 0, 1]], [[0, 0, 1], [1, 0, 0], [1, 0, 0]]),
    esse(5, "E1_13", "E1_16", [[0, 0, 1], [0, 1, 0], [0, 1, 1]], [[0, 0, 1], [1, 0, 0], [0, 0, 1]]),
    esse(5, "E1_14", "E1_16", [[0, 0, 1], [0, 1, 0], [0, 1, 0]], [[1, 0, 1], [1, 0, 0], [1, 0, 1]]),
    esse(5, "E1_5", "F1_1", [[1, 0], [0, 1], [1, 0]], [[1, 1, 0], [0, 0, 1]], "R1,S1", unit=[2, 1]),
    esse(5, "E1_13", "F1_1", [[1, 0], [0, 1], [1, 1]], [[0, 0, 1], [1, 0, 0]], "R2,S2", unit=[2, 2]),
    esse(5, "E1_14", "F1_1", [[1, 0], [0, 1], [0, 1]], [[1, 0, 1], [1, 0, 0]], "R3,S3",
         note="printed with the labels R_2, S_2", unit=[1, 2]),
    esse(5, "E1_16", "F1_1", [[1, 0], [0, 1], [1, 0]], [[0, 1, 1], [0, 0, 1]], "R4,S4", unit=[2, 1]),
    esse(6, "E1_6", "E1_7", [[0, 1, 0], [0, 0, 1], [1, 1, 0]], [[0, 0, 1], [1, 1, 0], [0, 0, 1]]),
    esse(6, "E1_6", "E1_15", [[0, 0, 1], [1, 0, 0], [1, 0, 1]], [[0, 0, 1], [0, 1, 0], [1, 1, 0]]),
    esse(6, "E1_6", "E1_17", [[0, 0, 1], [0, 1, 0], [0, 1, 1]], [[0, 0, 1], [0, 0, 1], [1, 1, 0]]),
    esse(6, "E1_7", "E1_15", [[0, 0, 1], [1, 0, 0], [0, 0, 1]], [[0, 1, 1], [0, 1, 0], [1, 1, 0]]),
    esse(6, "E1_7", "E1_17", [[0, 0, 1], [0, 1, 0], [0, 0, 1]], [[0, 1, 1], [0, 1, 1], [1, 1, 0]]),
    esse(6, "E1_15", "E1_17", [[0, 1, 1], [0, 0, 1], [0, 1, 1]], [[0, 0, 1], [0, 0, 1], [1, 0, 0]]),
    esse(6, "E1_6", "F1_2", [[1, 0], [0, 1], [1, 1]], [[1, 1, 0], [0, 0, 1]], "R1,S1", unit=[2, 2]),
    esse(6, "E1_15", "F1_2", [[1, 1], [0, 1], [1, 1]], [[0, 0, 1], [1, 0, 0]], "R2,S2", unit=[2, 3]),
    esse(6, "E1_17", "F1_2", [[0, 1], [0, 1], [1, 0]], [[0, 1, 1], [0, 1, 1]], "R3,S3", unit=[1, 2]),
    esse(6, "E1_7", "F1_2", [[1, 0], [0, 1], [1, 0]], [[1, 1, 0], [0, 1, 1]], "R4,S4", unit=[2, 1]),
    esse(6, "F1_2", "R1_2", [[1], [1]], [[1, 1]]),
    esse(7, "E1_8", "E1_12", [[0, 0, 1], [1, 0, 0], [1, 1, 0]], [[1, 0, 1], [0, 1, 0], [1, 1, 0]], "R1,S1"),
    esse(7, "E1_8", "E1_12", [[1, 0, 0], [0, 1, 1], [1, 0, 1]], [[1, 1, 0], [1, 0, 0], [0, 0, 1]], "R2,S2",
         note="printed S_2 has last row (0,0,0); (0,0,1) is the unique completion found by exhaustive search",
         printed={"R": [[1, 0, 0], [0, 1, 1], [1, 0, 1]], "S": [[1, 1, 0], [1, 0, 0], [0, 0, 0]]}),
    esse(14, "F2_1", "F2_2", [[1, 1], [1, 0]], [[1, 0], [0, 2]]),
    esse(14, "E2_3", "E3_4", [[0, 0, 1], [1, 0, 0], [1, 1, 0]], [[1, 0, 1], [0, 1, 0], [0, 1, 0]]),
    esse(14, "E2_4", "E3_4", [[1, 0, 0], [0, 1, 1], [1, 0, 0]], [[1, 1, 0], [0, 0, 1], [1, 0, 0]]),
    esse(14, "E2_3", "F2_1", [[0, 1], [1, 0], [1, 1]], [[1, 0, 1], [0, 1, 0]], "R1,S1", unit=[2, 2]),
    esse(14, "E3_4", "F2_1", [[1, 0], [0, 1], [0, 1]], [[1, 1, 1], [1, 0, 0]], "R2,S2", unit=[1, 2]),
    esse(14, "E2_4", "F2_2", [[1, 0], [0, 1], [1, 0]], [[1, 1, 0], [1, 0, 1]], "R1,S1", unit=[2, 1]),
    esse(14, "E3_4", "F2_2", [[1, 1], [1, 0], [1, 0]], [[1, 0, 0], [0, 1, 1]], "R2,S2", unit=[3, 1]),
    esse(15, "E2_5", "E3_1", [[0, 1, 0], [0, 0, 1], [1, 1, 0]], [[1, 0, 0], [0, 1, 0], [0, 1, 1]]),
    esse(16, "E2_6", "E3_2", [[0, 0, 1], [1, 1, 0], [0, 1, 0]], [[0, 0, 1], [1, 1, 0], [1, 1, 0]]),
    esse(16, "E2_6", "F3_2r", [[1, 0], [1, 1], [1, 0]], [[1, 1, 0], [0, 0, 1]], "R1,S1",
         note="S R equals F3_2 only with its vertices ordered (w2, w1)", unit=[3, 1]),
    esse(16, "E3_2", "F3_2r", [[0, 1], [1, 0], [1, 0]], [[1, 1, 1], [0, 1, 0]], "R2,S2",
         note="S R equals F3_2 only with its vertices ordered (w2, w1)", unit=[2, 1]),
    {"case": 5, "kind": "esse", "pair": ["E1_5", "E1_13"], "R": [[0, 0, 1], [0, 1, 0], [1, 1, 0]],
     "S": [[0, 0, 1], [1, 0, 0], [0, 0, 1]], "expected": False,
     "note": "synthetic negative: R and S swapped without swapping the pair"},
    {"case": 7, "kind": "intertwiner", "pair": ["E1_12", "E1_8"],
     "T": [[0, 0, 1], [-1, 0, 1], [2, 1, -1]],
     "flags": {"unimodular": True, "pointed": True, "cone_preserving": True}, "expected": True,
     "note": "satisfies A_{E1_12} T = T A_{E1_8}; as a row map it sends G_{E1_12} to G_{E1_8}"},
    {"case": 15, "kind": "intertwiner", "pair": ["E3_1", "E2_5"],
     "T": [[1, 0, 0], [0, 1, 0], [0, 1, 1]],
     "flags": {"unimodular": True, "pointed": False, "cone_preserving": True}, "expected": True,
     "note": "printed as A_{E2_5} T = T A_{E3_1}; it satisfies A_{E3_1} T = T A_{E2_5} (T is the S of the ESSE)"},
    {"case": 14, "kind": "sse", "pair": ["E2_3", "E2_4"], "steps": [
        {"R": [[0, 0, 1], [1, 0, 0], [1, 1, 0]], "S": [[1, 0, 1], [0, 1, 0], [0, 1, 0]]},
        {"R": [[1, 1, 0], [0, 0, 1], [1, 0, 0]], "S": [[1, 0, 0], [0, 1, 1], [1, 0, 0]]},
    ], "expected": True, "note": "E2_3 ~ E3_4 ~ E2_4 composed from the two displayed witnesses"},
]

# order-unit systems: no pointed unimodular intertwiner; all verdicts forced by the algebra
POINTED = [
    {"case": 5, "matrix": "F1_1", "from": "E1_5", "to": "E1_13", "unit_from": [2, 1], "unit_to": [2, 2],
     "expected": "UNCONDITIONAL", "reason": "unique", "T": [[0, 2], [2, -2]]},
    {"case": 5, "matrix": "F1_1", "from": "E1_5", "to": "E1_14", "unit_from": [2, 1], "unit_to": [1, 2],
     "expected": "UNCONDITIONAL", "reason": "unique", "T": [[-1, 3], [3, -4]]},
    {"case": 5, "matrix": "F1_1", "from": "E1_13", "to": "E1_14", "unit_from": [2, 2], "unit_to": [1, 2],
     "expected": "UNCONDITIONAL", "reason": "no integer solution"},
    {"case": 14, "matrix": "F2_1", "from": "E2_3", "to": "E3_4", "unit_from": [2, 2], "unit_to": [1, 2],
     "expected": "UNCONDITIONAL", "reason": "no rational solution"},
    {"case": 14, "matrix": "F2_2", "from": "E2_4", "to": "E3_4", "unit_from": [2, 1], "unit_to": [3, 1],
     "expected": "UNCONDITIONAL", "reason": "no rational solution"},
    {"case": 15, "matrix": "E3_1", "matrix_to": "E2_5", "from": "E2_5", "to": "E3_1",
     "unit_from": [1, 1, 1], "unit_to": [1, 1, 1], "expected": "UNCONDITIONAL", "reason": "no integer solution"},
    {"case": 16, "matrix": "F3_2r", "from": "E2_6", "to": "E3_2", "unit_from": [3, 1], "unit_to": [2, 1],
     "expected": "UNCONDITIONAL", "reason": "no integer solution"},
]

CASE_OF = {}
for n, (members, *_rest) in enumerate(TABLE, start=1):
    for gid in members:
        CASE_OF[gid] = n


def build():
    entries = []
    for row, (members, k0, kgr, pf, pf_value) in enumerate(TABLE, start=1):
        for gid in members:
            entries.append({
                "id": gid, "kind": "small", "group_tag": row, "graph": GRAPHS[gid],
                "expected_k0": k0, "expected_kgr": kgr, "expected_pf": pf, "expected_pf_value": pf_value,
            })
    for gid, g in AUX.items():
        entries.append({"id": gid, "kind": "auxiliary", "graph": g, "aliases": ALIASES.get(gid, [])})
    data = {
        "version": 1,
        "entries": entries,
        "delta_claims": DELTA,
        "wrong_delta_claim": WRONG_DELTA,
        "derivations": [{"id": i, "case": c, "start": s, "moves": m, "expect": t} for i, c, s, m, t in DERIVATIONS],
        "meets": MEETS,
        "unital": UNITAL,
        "reductions": REDUCTIONS,
        "reductions_via_esse": REDUCTIONS_VIA_ESSE,
        "fixtures": FIXTURES,
        "pointed_systems": POINTED,
    }
    text = json.dumps(data, indent=1, ensure_ascii=False, sort_keys=True) + "\n"
    OUT.write_text(text, encoding="utf-8")
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    OUT.with_suffix(".json.sha256").write_text(digest + "\n")
    print(digest)


if __name__ == "__main__":
    build()
