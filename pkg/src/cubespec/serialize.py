"""JSON interchange formats.

Functions travel as {"n": int, "values": ["p/q" or "p", ...]} with values
in vertex-code order.  Vertex sets travel as arrays of bitstrings with
coordinate 1 leftmost, so code 1 in H(4) is "1000"; the mapping between
the string form and the integer code is string index c <-> bit c.
All emitters sort object keys so output is byte-stable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .constructions import Blueprint
from .functions import VertexFunction
from .search import CanonicalForm, SearchReport
from .spectral import SpectrumSet
from .trades import AffineSubspace, TradePair

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def fraction_to_str(value: Fraction) -> str:
    return str(value)


def fraction_from_str(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a 'p' or 'p/q' rational string: {text!r}")
    return Fraction(text)


def function_to_dict(f: VertexFunction) -> dict:
    return {"n": f.n, "values": [fraction_to_str(v) for v in f.values]}


def function_from_dict(payload: dict) -> VertexFunction:
    if not isinstance(payload, dict) or "n" not in payload or "values" not in payload:
        raise ValueError("function payload needs 'n' and 'values'")
    n = payload["n"]
    if not isinstance(n, int):
        raise ValueError(f"'n' must be an integer, got {n!r}")
    values = payload["values"]
    if not isinstance(values, list):
        raise ValueError("'values' must be a list of rational strings")
    return VertexFunction(n, tuple(fraction_from_str(v) for v in values))


def vertex_to_bitstring(code: int, n: int) -> str:
    if not 0 <= code < (1 << n):
        raise ValueError(f"vertex code {code} out of range for n={n}")
    return "".join("1" if code >> c & 1 else "0" for c in range(n))


def vertex_from_bitstring(text: str, n: int) -> int:
    if not isinstance(text, str) or len(text) != n or any(ch not in "01" for ch in text):
        raise ValueError(f"not an n={n} bitstring: {text!r}")
    return sum(1 << c for c, ch in enumerate(text) if ch == "1")


def vertex_set_to_list(codes, n: int) -> list[str]:
    return [vertex_to_bitstring(x, n) for x in sorted(codes)]


def vertex_set_from_list(items, n: int) -> frozenset[int]:
    return frozenset(vertex_from_bitstring(s, n) for s in items)


def spectrum_to_dict(s: SpectrumSet) -> dict:
    return {"levels": list(s.sorted_levels)}


def blueprint_to_dict(bp: Blueprint) -> dict:
    return {
        "case": bp.case,
        "odd": list(bp.odd_parts),
        "even": list(bp.even_parts),
        "r": bp.remainder,
    }


def blueprint_from_dict(payload: dict, n: int) -> Blueprint:
    return Blueprint(
        payload["case"],
        tuple(payload["odd"]),
        tuple(payload["even"]),
        payload["r"],
        n,
    )


def trade_pair_to_dict(tp: TradePair) -> dict:
    return {
        "n": tp.n,
        "t0": vertex_set_to_list(tp.t0, tp.n),
        "t1": vertex_set_to_list(tp.t1, tp.n),
    }


def trade_pair_from_dict(payload: dict) -> TradePair:
    n = payload["n"]
    return TradePair(
        vertex_set_from_list(payload["t0"], n),
        vertex_set_from_list(payload["t1"], n),
        n,
    )


def affine_subspace_to_dict(sub: AffineSubspace) -> dict:
    return {
        "n": sub.n,
        "translation": vertex_to_bitstring(sub.translation, sub.n),
        "basis": [vertex_to_bitstring(b, sub.n) for b in sub.basis],
        "dimension": sub.dimension,
    }


def affine_subspace_from_dict(payload: dict) -> AffineSubspace:
    n = payload["n"]
    return AffineSubspace(
        n,
        vertex_from_bitstring(payload["translation"], n),
        tuple(vertex_from_bitstring(b, n) for b in payload["basis"]),
    )


def canonical_form_to_dict(cf: CanonicalForm) -> dict:
    return {"n": cf.n, "values": [fraction_to_str(v) for v in cf.values]}


def search_report_to_dict(report: SearchReport, *, with_timing: bool = False) -> dict:
    return {
        "n": report.n,
        "i": report.i,
        "j": report.j,
        "levels": list(report.levels) if report.levels is not None else None,
        "min_support": report.min_support,
        "witness": function_to_dict(report.witness) if report.witness is not None else None,
        "classes_found": [canonical_form_to_dict(c) for c in report.classes_found],
        "matched_blueprints": [
            {"blueprint": blueprint_to_dict(bp), "class_index": idx}
            for bp, idx in report.matched_blueprints
        ],
        "ok": report.ok,
        "notes": list(report.notes),
        "elapsed": report.elapsed if with_timing else None,
        "nodes_examined": report.nodes_examined,
    }


def dumps(payload) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
