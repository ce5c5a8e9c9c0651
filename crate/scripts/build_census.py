"""Regenerate the bundled census files from the KnotInfo / LinkInfo tables.

Requires the `database_knotinfo` and `sympy` packages. Writes

  crates/core/data/census.csv        name,pd,known_crosscap,known_lower,known_upper
  crates/core/data/jones_reference.csv  name,jones_a   (Jones polynomial in A, t = A^-4)
"""
import csv
import os
import re
import sys

import database_knotinfo
import sympy

csv.field_size_limit(10**9)

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "crates", "core", "data")
SRC = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data")

TABLE_KNOTS = """10_85 10_93 10_100 11a_74 11a_97 11a_223 11a_250 11a_259 11a_263 11a_279
11a_293 11a_313 11a_323 11a_330 11a_338 11a_346 12a_636 12a_641 12a_753 12a_827
12a_845 12a_970 12a_984 12a_1017 12a_1031 12a_1095 12a_1107 12a_1114 12a_1142
12a_1171 12a_1179 12a_1205 12a_1220 12a_1240 12a_1243 12a_1247 12a_1285""".split()


def rows(path):
    with open(path) as f:
        r = csv.DictReader(f, delimiter="|")
        out = list(r)
    return out[1:]  # second row is the human-readable header


def pd_terms(text):
    quads = re.findall(r"[\[{]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\]}]", text)
    return " ".join("X(%s,%s,%s,%s)" % q for q in quads)


def jones_in_a(expr, var):
    sym = sympy.Symbol(var)
    e = sympy.sympify(expr.replace("^", "**"), locals={var: sym})
    a = sympy.Symbol("A")
    step = -4 if var == "t" else -2
    e = sympy.expand(e.subs(sym, a**step))
    terms = sympy.Poly(sympy.expand(e * a**400), a).terms()
    out = sorted(((m[0] - 400, int(c)) for m, c in terms), reverse=True)
    return " + ".join("%d*A^%d" % (c, k) for k, c in out).replace("+ -", "- ")


def crosscap_fields(value):
    value = value.strip()
    if not value:
        return "", "", ""
    m = re.match(r"\[(\d+),(\d+)\]", value)
    if m:
        return "", m.group(1), m.group(2)
    return value, "", ""


def main():
    knots = rows(os.path.join(SRC, "knotinfo_data_complete.csv"))
    links = rows(os.path.join(SRC, "linkinfo_data_complete.csv"))
    census, jones = [], []
    for r in knots:
        n = r["name"]
        c = int(r["crossing_number"] or 0)
        if not (3 <= c <= 10 or n in TABLE_KNOTS):
            continue
        census.append((n, pd_terms(r["pd_notation"])) + crosscap_fields(r["crosscap_number"]))
        jones.append((n, jones_in_a(r["jones_polynomial"], "t")))
    for r in links:
        n = r["name"]
        c = int(r["crossing_number"] or 0)
        if not n.endswith("{0}") or c > 7:
            continue
        census.append((n, pd_terms(r["pd_notation_vector"]), "", "", ""))
        jones.append((n, jones_in_a(r["jones_polynomial"], "x")))
    with open(os.path.join(DATA, "census.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "pd", "known_crosscap", "known_lower", "known_upper"])
        w.writerows(census)
    with open(os.path.join(DATA, "jones_reference.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "jones_a"])
        w.writerows(jones)
    print("%d census rows" % len(census), file=sys.stderr)


if __name__ == "__main__":
    main()
