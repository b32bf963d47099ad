"""Payload builders and renderers for the command-line tool.

Every payload is a plain dict whose key order is fixed by construction, so
``json.dumps`` without ``sort_keys`` is already canonical. CSV and table
renderers flatten the same rows with the column lists below.
"""

from __future__ import annotations

import csv
import io
import json

from . import characters, counting, galois, gk

SCHEMA_VERSION = 1

ENUMERATE_COLUMNS = ["n", "q", "lambda", "J", "size", "regular"]
COUNT_COLUMNS = ["n", "q", "d", "g_closed", "g_brute", "h_closed", "h_brute", "match"]
CORRESPOND_COLUMNS = [
    "n", "p", "lambda", "J", "size", "regular", "r_values",
    "projective_class_representative", "d_sigma", "matched",
]
CLASSES_COLUMNS = ["n", "q", "representative", "size", "d_sigma", "lift_count"]


def enumerate_payload(n: int, q: int, jobs: int = 1, budget: int = characters.DEFAULT_BUDGET) -> dict:
    packets = characters.all_packets(n, q, jobs=jobs, budget=budget)
    return {
        "schema": SCHEMA_VERSION,
        "command": "enumerate",
        "n": n,
        "q": q,
        "packet_count": len(packets),
        "packets": [P.to_dict() for P in packets],
    }


def count_unit(n: int, q: int, brute: bool, jobs: int = 1, budget: int = characters.DEFAULT_BUDGET) -> dict:
    return counting.count_report(n, q, brute=brute, jobs=jobs, budget=budget).to_dict()


def count_payload(units: list[dict], brute: bool) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": "count",
        "brute": brute,
        "match": all(u["match"] for u in units),
        "reports": units,
    }


def correspond_payload(
    n: int,
    p: int,
    jobs: int = 1,
    budget: int = characters.DEFAULT_BUDGET,
    residue_budget: int = galois.DEFAULT_RESIDUE_BUDGET,
) -> dict:
    report = gk.verify_wbij(n, p, jobs=jobs, budget=budget, residue_budget=residue_budget)
    flipped = gk.verify_wbij(
        n, p, orientation=-gk.DEFAULT_ORIENTATION, jobs=jobs, budget=budget,
        residue_budget=residue_budget,
    )
    body = report.to_dict()
    return {
        "schema": SCHEMA_VERSION,
        "command": "correspond",
        "n": n,
        "p": p,
        "ok": body["ok"],
        # k-tuple sign: "inverse" is k = -pairing (the default), "direct" is k = +pairing
        "orientations": {"inverse": report.ok, "direct": flipped.ok},
        "tallies": body["tallies"],
        "failures": body["failures"],
        "packets": body["packets"],
    }


def classes_payload(n: int, q: int, budget: int = galois.DEFAULT_RESIDUE_BUDGET) -> dict:
    classes = galois.projective_classes(n, q, budget=budget)
    return {
        "schema": SCHEMA_VERSION,
        "command": "classes",
        "n": n,
        "q": q,
        "class_count": len(classes),
        "classes": [c.to_dict() for c in classes],
    }


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def rows_of(payload: dict) -> tuple[list[str], list[list[str]]]:
    cmd = payload["command"]
    if cmd == "enumerate":
        return ENUMERATE_COLUMNS, [
            [_cell(P[c]) for c in ENUMERATE_COLUMNS] for P in payload["packets"]
        ]
    if cmd == "count":
        rows = []
        for unit in payload["reports"]:
            for r in unit["rows"]:
                match = r["g_brute"] is None or (
                    r["g_closed"] == r["g_brute"] and r["h_closed"] == r["h_brute"]
                )
                rows.append([_cell(x) for x in (
                    unit["n"], unit["q"], r["d"], r["g_closed"], r["g_brute"],
                    r["h_closed"], r["h_brute"], match,
                )])
        return COUNT_COLUMNS, rows
    if cmd == "correspond":
        rows = []
        for m in payload["packets"]:
            rows.append([_cell(x) for x in (
                payload["n"], payload["p"], m["character"]["lambda"], m["character"]["J"],
                m["size"], m["regular"], m["r_values"], m["projective_class_representative"],
                m["d_sigma"], m["matched"],
            )])
        return CORRESPOND_COLUMNS, rows
    if cmd == "classes":
        return CLASSES_COLUMNS, [[_cell(c[k]) for k in CLASSES_COLUMNS] for c in payload["classes"]]
    raise ValueError(f"unknown command {cmd!r}")


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    columns, rows = rows_of(payload)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "table":
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
