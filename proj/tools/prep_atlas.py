#!/usr/bin/env python3
"""Builds data/knots.tsv and data/knot_pd.tsv.

Merges the hand-entered bound table (data/table1.tsv) with polynomial
invariants, genus, determinant and PD codes from the KnotInfo database
(pip package database_knotinfo). Run once; the outputs are committed.
"""
import argparse
import pathlib
import sys

import sympy
from database_knotinfo import link_list

TORUS = {"3_1": (3, 2), "5_1": (5, 2), "7_1": (7, 2), "9_1": (9, 2), "8_19": (4, 3)}
TWIST = {"3_1": 1, "4_1": 2, "5_2": 3, "6_1": 4, "7_2": 5, "8_1": 6, "9_2": 7}

v, z, t = sympy.symbols("v z t")


def homfly_terms(text):
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"v": v, "z": z}))
    terms = []
    for mono, c in expr.as_coefficients_dict().items():
        powers = mono.as_powers_dict()
        terms.append((int(powers.get(v, 0)), int(powers.get(z, 0)), int(c)))
    terms.sort()
    return ",".join(f"[{a},{b},{c}]" for a, b, c in terms)


def alexander_compact(text):
    poly = sympy.Poly(sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": t})), t)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    span = len(coeffs) - 1
    offset = -(span // 2) if span % 2 == 0 else 0
    return f"{offset}:" + ",".join(str(c) for c in coeffs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    data = pathlib.Path(args.data)

    table = []
    for line in (data / "table1.tsv").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        table.append(line.split("\t"))

    info = {k["name"]: k for k in link_list() if k.get("name")}
    out = ["# Generated by tools/prep_atlas.py; grammar in data/README.md",
           "# name\tcomponents\tcrossings\talexander\thomfly\tgenus\tneg_tb_max\tneg_sl_max"
           "\tfpbk_lo\tfpbk_hi\tflags"]
    pd_out = ["# name\tpd (KnotInfo PD notation, same chirality as the homfly column)"]
    for name, tb, sl, lo, hi, marks in table:
        k = info[name]
        flags = []
        if k["alternating"] == "Y":
            flags.append("alternating")
        if k["strongly_quasipositive"] == "Y":
            flags.append("sqp")
        if name in TORUS:
            flags.append("torus=%d,%d" % TORUS[name])
        else:
            flags.append("nontorus")
        if name in TWIST:
            flags.append(f"twist={TWIST[name]}")
        if marks != "-":
            flags.extend(marks.split(";"))
        flags.append(f"det={int(k['determinant'])}")
        crossings = name.split("_")[0]
        out.append("\t".join([name, "1", crossings, alexander_compact(k["alexander_polynomial"]),
                              homfly_terms(k["homfly_polynomial"]), str(int(k["three_genus"])),
                              tb, sl, lo, hi, ";".join(flags)]))
        pd_out.append(f"{name}\t{k['pd_notation']}")
    (data / "knots.tsv").write_text("\n".join(out) + "\n")
    (data / "knot_pd.tsv").write_text("\n".join(pd_out) + "\n")
    print(f"wrote {len(table)} rows", file=sys.stderr)


if __name__ == "__main__":
    main()
