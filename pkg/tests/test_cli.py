import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from holospin import output
from holospin.catalog import HolonomyId
from holospin.cli import main
from holospin.engine import _workers, fixed_space
from holospin.numfield import FieldScalar

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "schema" / "output.v1.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_kernel_su11_gram(capsys):
    code, doc = run_json(capsys, "kernel", "--group", "su", "--p", "1", "--q", "1", "--gram")
    assert code == 0
    rep = output.decode_report(doc["results"]["report"])
    assert rep.dim == 2
    assert sorted(rep.gram.diagonal, key=lambda x: x.to_fraction()) == [FieldScalar(-1), FieldScalar(1)]


def test_kernel_text(capsys):
    code, out, _ = run(capsys, "kernel", "--group", "su", "--p", "1", "--q", "1", "--gram", "--show-basis")
    assert code == 0
    assert "N = 2" in out and "v1 = u(1,1)" in out and "spacelike, timelike" in out


def test_kernel_g2_and_so0(capsys):
    code, doc = run_json(capsys, "kernel", "--group", "g2")
    assert code == 0 and doc["results"]["report"]["dim"] == 1
    code, doc = run_json(capsys, "kernel", "--group", "so0", "--p", "1", "--q", "2")
    assert code == 0 and doc["results"]["report"]["dim"] == 0


def test_kernel_with_variants(capsys):
    code, doc = run_json(capsys, "kernel", "--group", "spin43", "--variants")
    assert code == 0
    labels = [v["label"] for v in doc["results"]["variants"]["variants"]]
    assert labels == ["H", "H'", "H''", "H'''"]


def test_variants_command(capsys):
    code, out, _ = run(capsys, "variants", "--group", "g2star")
    assert code == 0 and "H''' = e1 e7 . V" in out
    code, doc = run_json(capsys, "variants", "--group", "g2")
    assert code == 0 and doc["results"]["variants"]["problems"]


@pytest.mark.parametrize("argv", [
    ["kernel", "--group", "e8"],
    ["kernel", "--group", "sp", "--p", "1", "--q", "0"],
    ["kernel", "--group", "spr", "--p", "2", "--q", "1"],
    ["kernel"],
    ["table", "--max-n", "3"],
    ["table", "--max-n", "8", "--workers", "0"],
    ["verify", "--suite", "nope"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "8", "--workers", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "| H | n | r | N | chirality | causal type | expected N | status |"
    assert len(lines) - 2 >= 11 and all(line.endswith("| pass |") for line in lines[2:])


def test_table_json(capsys):
    code, doc = run_json(capsys, "table", "--max-n", "8", "--workers", "1")
    assert code == 0 and doc["results"]["failed"] == 0
    labels = {row["id"]["label"] for row in doc["results"]["rows"]}
    assert {"SO0(1,1)", "U(1,1)", "SU(1,1)", "Sp(1,1)", "SpSp1(1,1)", "SpR_SL2R(2)", "SOC(2)",
            "G2", "G2star", "Spin7", "Spin43"} <= labels


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "forms")
    assert code == 0 and all(p["passed"] for p in doc["results"]["properties"])
    code, out, _ = run(capsys, "verify", "--suite", "clifford")
    assert code == 0 and out.count("PASS") == 5


def test_output_is_deterministic(capsys):
    docs = []
    for _ in range(2):
        _, out, _ = run(capsys, "kernel", "--group", "sp", "--p", "1", "--q", "1", "--variants", "--format", "json")
        doc = json.loads(out)
        doc.pop("timing")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


small_q = st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 6)


@given(small_q, small_q, small_q, small_q)
def test_scalar_round_trip(a, b, c, d):
    x = FieldScalar.from_parts(a, b, c, d)
    enc = output.encode_scalar(x)
    assert output.decode_scalar(json.loads(json.dumps(enc))) == x
    assert [Fraction(n, m) for n, m in enc] == list(x.parts())


@pytest.mark.parametrize("args", [("Sp", 1, 1), ("G2C",), ("G2",), ("SO0", 1, 1), ("Spin43",)], ids=str)
def test_report_round_trip(args):
    rep = fixed_space(HolonomyId(*args))
    data = json.loads(json.dumps(output.encode_report(rep)))
    assert output.decode_report(data) == rep


def test_worker_cap(monkeypatch):
    monkeypatch.setenv("HOLOSPIN_THREADS", "2")
    assert _workers(8) == 2 and _workers(None) <= 2
    monkeypatch.setenv("HOLOSPIN_THREADS", "16")
    assert _workers(3) == 3
    monkeypatch.delenv("HOLOSPIN_THREADS")
    assert _workers(None) == (os.cpu_count() or 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "holospin", "kernel", "--group", "spin7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "N = 1" in proc.stdout
