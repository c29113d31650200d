"""JSON encoding of reports, tables and suite results (schema version 1).

A scalar ``a + b sqrt2`` is written as four ``[numerator, denominator]``
pairs for ``(re a, im a, re b, im b)``; decoding is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .catalog import HolonomyId
from .clifford import Signature
from .engine import ChiralitySplit, FixedSpaceReport, TableRow, VariantReport
from .numfield import FieldMatrix, FieldScalar
from .spinors import UBASIS, Causal, Chirality, GramReport, Spinor
from .verify import PropertyResult

SCHEMA_VERSION = "1"


def encode_scalar(x: FieldScalar) -> list[list[int]]:
    return [[p.numerator, p.denominator] for p in FieldScalar(x).parts()]


def decode_scalar(data) -> FieldScalar:
    if len(data) != 4:
        raise ValueError(f"scalar needs 4 components, got {len(data)}")
    return FieldScalar.from_parts(*(Fraction(int(n), int(d)) for n, d in data))


def encode_matrix(M: FieldMatrix) -> list[list]:
    return [[encode_scalar(x) for x in M.row(i)] for i in range(M.rows)]


def decode_matrix(rows) -> FieldMatrix:
    return FieldMatrix.from_rows([[decode_scalar(x) for x in row] for row in rows])


def encode_id(hid: HolonomyId) -> dict:
    return {"family": hid.family, "p": hid.p, "q": hid.q, "label": hid.label()}


def encode_signature(sig: Signature) -> dict:
    return {"kappa": list(sig.kappa), "n": sig.n, "r": sig.r, "s": sig.s, "label": sig.label()}


def encode_spinor(v: Spinor) -> dict:
    return {"coords": [encode_scalar(x) for x in v.ucoords()], "text": str(v)}


def decode_spinor(data) -> Spinor:
    return Spinor(tuple(decode_scalar(x) for x in data["coords"]), UBASIS)


def _encode_split(split: ChiralitySplit | None):
    if split is None:
        return None
    return {"plus": split.plus, "minus": split.minus, "mixed": split.mixed}


def _decode_split(data):
    return None if data is None else ChiralitySplit(data["plus"], data["minus"], data["mixed"])


def _encode_gram(g: GramReport | None):
    if g is None:
        return None
    return {"matrix": encode_matrix(g.gram), "causal": [c.value for c in g.causal],
            "definite": g.is_definite()}


def _decode_gram(data):
    if data is None:
        return None
    return GramReport(decode_matrix(data["matrix"]), tuple(Causal(c) for c in data["causal"]))


def encode_report(rep: FixedSpaceReport) -> dict:
    return {
        "id": encode_id(rep.hid),
        "signature": encode_signature(rep.signature),
        "dim": rep.dim,
        "basis": [encode_spinor(v) for v in rep.basis],
        "chirality": _encode_split(rep.chirality),
        "basis_chirality": None if rep.basis_chirality is None else [c.value for c in rep.basis_chirality],
        "gram": _encode_gram(rep.gram),
        "notes": list(rep.notes),
    }


def decode_report(data: dict) -> FixedSpaceReport:
    hid = HolonomyId(data["id"]["family"], data["id"]["p"], data["id"]["q"])
    chir = data["basis_chirality"]
    return FixedSpaceReport(
        hid=hid,
        signature=Signature(tuple(data["signature"]["kappa"])),
        dim=data["dim"],
        basis=[decode_spinor(v) for v in data["basis"]],
        chirality=_decode_split(data["chirality"]),
        basis_chirality=None if chir is None else [Chirality(c) for c in chir],
        gram=_decode_gram(data["gram"]),
        notes=list(data["notes"]),
    )


def encode_variant(v: VariantReport) -> dict:
    return {
        "label": v.label,
        "operator": list(v.operator),
        "basis": [encode_spinor(x) for x in v.basis],
        "chirality": _encode_split(v.chirality),
        "basis_chirality": None if v.basis_chirality is None else [c.value for c in v.basis_chirality],
        "gram": _encode_gram(v.gram),
        "predicted_factor": v.predicted_factor,
        "checks": dict(v.checks),
    }


def encode_variants(variants: dict[str, VariantReport], problems: list[str]) -> dict:
    return {"variants": [encode_variant(v) for v in variants.values()], "problems": list(problems)}


def encode_row(row: TableRow) -> dict:
    exp = row.expected
    return {
        "id": encode_id(exp.hid),
        "n": exp.n,
        "r": exp.r,
        "expected": {"N": exp.expected_N, "chirality": exp.chirality_pattern, "causal": exp.causal_pattern},
        "report": encode_report(row.report),
        "passed": row.passed,
        "failures": list(row.failures),
    }


def encode_property(res: PropertyResult) -> dict:
    return {"suite": res.suite, "name": res.name, "passed": res.passed,
            "checked": res.checked, "counterexample": _jsonable(res.counterexample)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def document(command: str, args: dict, results: Any, seconds: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": command, "args": _jsonable(args)},
        "results": results,
        "timing": {"seconds": round(seconds, 3)},
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
