#!/usr/bin/env python3
"""Regenerates the example registry under data/registry.

Structure constants are computed here from the defining presentations, so the
files double as an oracle independent of the C++ builders in tests/.
"""

import itertools
import json
import pathlib
import sys
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "registry"


def s(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rows(matrix):
    return [[s(v) for v in row] for row in matrix]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def algebra_from_table(basis, product, unit):
    """product(i, j) -> coordinate list of e_i e_j."""
    n = len(basis)
    mult = zeros(n, n * n)
    for i, j in itertools.product(range(n), repeat=2):
        for r, v in enumerate(product(i, j)):
            mult[r][i * n + j] = v
    return {"basis": basis, "mult": mult, "unit": unit}


def grouplike(basis):
    n = len(basis)
    comult = zeros(n * n, n)
    for i in range(n):
        comult[i * n + i][i] = 1
    return {"basis": basis, "comult": comult, "counit": [1] * n}


def transpose(m):
    return [list(col) for col in zip(*m)]


def emit_algebra(a, kind="algebra"):
    return {"type": kind, "basis": a["basis"], "mult": rows(a["mult"]), "unit": [s(v) for v in a["unit"]]}


def emit_coalgebra(c):
    return {"type": "coalgebra", "basis": c["basis"], "comult": rows(c["comult"]),
            "counit": [s(v) for v in c["counit"]]}


def emit_bialgebra(a, c):
    out = emit_algebra(a, "bialgebra")
    out["comult"] = rows(c["comult"])
    out["counit"] = [s(v) for v in c["counit"]]
    return out


def dual_basis(basis):
    return [b + "*" for b in basis]


def kx2(p):
    def prod(i, j):
        return [1, 0] if i + j == 0 else [0, 1] if i + j == 1 else [p, 0]
    return algebra_from_table(["1", "x"], prod, [1, 0])


def kx3():
    def prod(i, j):
        v = [0, 0, 0]
        if i + j < 3:
            v[i + j] = 1
        return v
    return algebra_from_table(["1", "x", "x2"], prod, [1, 0, 0])


def m2():
    basis = ["e11", "e12", "e21", "e22"]

    def prod(a, b):
        i, j = divmod(a, 2)
        k, l = divmod(b, 2)
        v = [0] * 4
        if j == k:
            v[i * 2 + l] = 1
        return v
    return algebra_from_table(basis, prod, [1, 0, 0, 1])


def kz2():
    return algebra_from_table(["1", "g"], lambda i, j: [1, 0] if (i + j) % 2 == 0 else [0, 1], [1, 0])


def kmon():
    return algebra_from_table(["1", "z"], lambda i, j: [1, 0] if i + j == 0 else [0, 1], [1, 0])


def ground():
    return algebra_from_table(["1"], lambda i, j: [1], [1])


def dual_coalgebra(a):
    return {"basis": dual_basis(a["basis"]), "comult": transpose(a["mult"]), "counit": list(a["unit"])}


def convolution(c):
    return {"basis": dual_basis(c["basis"]), "mult": transpose(c["comult"]), "unit": list(c["counit"])}


def structures():
    objs = {}
    objs["K"] = emit_bialgebra(ground(), grouplike(["1"]))
    for p in (0, 1, 2):
        objs[f"Kx2-{p}"] = emit_algebra(kx2(p))
    objs["Kx3"] = emit_algebra(kx3())
    objs["M2"] = emit_algebra(m2())
    objs["KZ2"] = emit_bialgebra(kz2(), grouplike(["1", "g"]))
    objs["Kmon"] = emit_bialgebra(kmon(), grouplike(["1", "z"]))
    objs["G2"] = emit_coalgebra(grouplike(["g0", "g1"]))
    return {"format": 1, "field": "q", "objects": objs}


def duals():
    objs = {}
    for name, a in [("Kx2-0", kx2(0)), ("Kx2-1", kx2(1)), ("Kx2-2", kx2(2)), ("Kx3", kx3()), ("M2", m2())]:
        objs[name + "*"] = emit_coalgebra(dual_coalgebra(a))
    for name, a, basis in [("K", ground(), ["1"]), ("KZ2", kz2(), ["1", "g"]), ("Kmon", kmon(), ["1", "z"])]:
        objs[name + "*"] = emit_bialgebra(convolution(grouplike(basis)), dual_coalgebra(a))
    objs["G2*"] = emit_algebra(convolution(grouplike(["g0", "g1"])))
    return {"format": 1, "field": "q", "objects": objs}


def character(bialgebra, values):
    return {"type": "module", "algebra": bialgebra, "basis": ["v"], "action": rows([values])}


def examples():
    objs = {}
    objs["KZ2-trivial"] = character("KZ2", [1, 1])
    objs["KZ2-sign"] = character("KZ2", [1, -1])
    # Z/2-graded coalgebra dual to K[x]/(x^2): 1* even, x* odd.
    graded = zeros(4, 2)
    graded[0][0] = 1
    graded[3][1] = 1
    objs["Kx2-0*-graded"] = {"type": "comodule", "coalgebra": "KZ2", "space": "Kx2-0*", "side": "right",
                             "coaction": rows(graded)}
    # Same coaction shape on K[Z/2] via Delta: a comodule, but not a comodule coalgebra.
    objs["KZ2-regular"] = {"type": "comodule", "coalgebra": "KZ2", "space": "KZ2", "side": "right",
                           "coaction": rows(grouplike(["1", "g"])["comult"])}
    objs["Kx3-delta"] = {"type": "derivation", "algebra": "Kx3",
                         "matrix": rows([[0, 0, 0], [0, 0, 0], [0, 1, 0]])}
    objs["Kx2-1-not-derivation"] = {"type": "derivation", "algebra": "Kx2-1", "matrix": rows([[0, 1], [0, 0]])}
    objs["Kmon-z"] = {"type": "integral", "bialgebra": "Kmon", "element": ["0", "1"]}
    objs["KZ2-g"] = {"type": "integral", "bialgebra": "KZ2", "element": ["0", "1"]}
    objs["K-1"] = {"type": "integral", "bialgebra": "K", "element": ["1"]}

    # Algebra factorization on K[x]/(x^2 - 1) with q = 2; basis order 1(x)1, 1(x)x, x(x)1, x(x)x.
    def table(q):
        m = zeros(4, 4)
        m[0][0] = 1          # 1(x)1 -> 1(x)1
        m[2][1] = 1          # 1(x)x -> x(x)1
        m[1][2] = 1          # x(x)1 -> 1(x)x
        m[0][3] = q          # x(x)x -> q 1(x)1 - x(x)x
        m[3][3] = -1
        return m
    objs["Kx2-1-table"] = {"type": "entwining", "kind": "factorization", "left": "Kx2-1", "right": "Kx2-1",
                           "psi": rows(table(2))}
    # Flip on K[x]/(x^2 - 1) with x(x)x |-> x(x)x + 1(x)1; invertible but not braided.
    corrupted = [[1 if (c % 2) * 2 + c // 2 == r else 0 for c in range(4)] for r in range(4)]
    corrupted[0][1] = 1  # (1 (x) x) picks up 1 (x) 1: breaks the braid relation
    objs["braid-corrupted"] = {"type": "map", "domain": ["Kx2-1", "Kx2-1"], "codomain": ["Kx2-1", "Kx2-1"],
                               "matrix": rows(corrupted)}
    objs["M2-twist-braided"] = {"type": "braided", "algebra": "M2",
                                "psi": rows([[1 if (c % 4) * 4 + c // 4 == r else 0 for c in range(16)]
                                             for r in range(16)])}
    objs["G2-twist"] = {"type": "entwining", "kind": "cosemi", "left": "K", "right": "G2",
                        "psi": rows([[1, 0], [0, 1]])}
    return {"format": 1, "field": "q", "objects": objs}


def dump(path, doc):
    path.write_text(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    dump(OUT / "structures.json", structures())
    dump(OUT / "duals.json", duals())
    dump(OUT / "examples.json", examples())
    return 0


if __name__ == "__main__":
    sys.exit(main())
