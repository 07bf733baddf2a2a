from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from semiq.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, SCHEMA_PATH, run
from semiq.psmod import corrupt, free_module, truncated_plane

SCHEMA = json.loads(SCHEMA_PATH.read_text())


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, err = invoke(*argv, "--format", "json")
    payload = json.loads(out) if out else None
    if payload is not None:
        jsonschema.validate(payload, SCHEMA)
    return code, payload, err


COMMANDS = [
    ("bracket", "--preset", "torus2", "--l", "5", "--f", "u^5", "--a", "v^5"),
    ("bracket", "--preset", "uqsl2", "--l", "3", "--f", "x", "--a", "K"),
    ("curvature", "--preset", "uqsl2", "--l", "3", "--f", "x", "--g", "y", "--a", "E"),
    ("check-axioms", "--preset", "torus2", "--l", "3"),
    ("check-axioms", "--kind", "poisson-module", "--random", "6", "--seed", "4"),
    ("decompose", "--n", "1", "--l", "3", "--j", "0"),
    ("cohomology", "--n", "2", "--l", "3", "--jmin", "-4", "--jmax", "2"),
    ("product-table", "--l", "5"),
    ("bwb", "--l", "3", "--lambda-min", "-4", "--lambda-max", "6"),
    ("uqsl2-table", "--l", "3"),
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0] + ":" + "-".join(a[1:4]))
def test_json_output_validates_and_is_deterministic_across_jobs(argv):
    code1, p1, _ = invoke_json(*argv, "--jobs", "1")
    code4, p4, _ = invoke_json(*argv, "--jobs", "4")
    assert code1 == code4 == EXIT_OK
    assert p1["status"] == "ok" and p1["command"] == argv[0]
    a = json.dumps(p1, sort_keys=True, indent=2)
    b = json.dumps(p4, sort_keys=True, indent=2)
    assert a == b


def test_text_outputs():
    code, out, _ = invoke("bracket", "--preset", "torus2", "--l", "5", "--convention", "multiplicative",
                          "--f", "u^5", "--a", "v^5")
    assert code == EXIT_OK and out.splitlines()[0] == "25 * u^5 v^5"
    code, out, _ = invoke("decompose", "--n", "1", "--l", "3", "--j", "0")
    assert "O + 2 O(-1)" in out
    code, out, _ = invoke("curvature", "--preset", "torus2", "--l", "3", "--f", "u^3", "--g", "v^3", "--a", "u")
    assert "methods-agree: true" in out


def test_bracket_json_coefficients():
    code, p, _ = invoke_json("bracket", "--preset", "torus2", "--l", "5", "--f", "u^5", "--a", "v^5")
    terms = p["result"]["bracket"]["terms"]
    assert terms == [{"monomial": [5, 5], "coefficient": {"l": 5, "coords": ["25", "0", "0", "0"]}}]


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = invoke("product-table", "--l", "3", "--format", "json", "--output", str(target))
    assert code == EXIT_OK and out == ""
    jsonschema.validate(json.loads(target.read_text()), SCHEMA)


def test_config_file(tmp_path):
    cfg = tmp_path / "algebra.json"
    cfg.write_text(json.dumps({"presentation": {"kind": "quantum_torus", "matrix": [[0, 1], [-1, 0]],
                                                "names": ["a", "b"]}, "l": 5, "convention": "multiplicative"}))
    code, out, _ = invoke("bracket", "--config", str(cfg), "--f", "a^5", "--a", "b^5")
    assert code == EXIT_OK and out.startswith("25 * a^5 b^5")


def test_tables_mode(tmp_path):
    A = truncated_plane(1, {(1, 0): 1})
    M = free_module(A, 1)
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"algebra": A.to_json(), "module": M.to_json()}))
    code, p, _ = invoke_json("check-axioms", "--kind", "poisson-module", "--tables", str(good))
    assert code == EXIT_OK and p["result"]["extension_equivalent"]
    bad_module = M.with_bracket_entry(0, 0, 0, 5)  # {1, m} must vanish
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"algebra": A.to_json(), "module": bad_module.to_json()}))
    code, p, _ = invoke_json("check-axioms", "--kind", "poisson-module", "--tables", str(bad))
    assert code == EXIT_MISMATCH and p["status"] == "mismatch"
    assert p["result"]["extension_equivalent"]


def test_axiom_failure_exits_1():
    code, p, err = invoke_json("check-axioms", "--preset", "uqsl2", "--l", "3", "--central", "x",
                               "--central", "c", "--ambient", "E", "--ambient", "F")
    assert code == EXIT_MISMATCH and p["status"] == "mismatch"
    assert "mismatch" in err


@pytest.mark.parametrize("argv", [
    ("bracket", "--preset", "torus2", "--l", "4", "--f", "u^4", "--a", "v"),
    ("bracket", "--preset", "torus2", "--l", "5", "--f", "u", "--a", "v"),
    ("bracket", "--preset", "torus2", "--l", "5", "--f", "u^5 +", "--a", "v"),
    ("bracket", "--preset", "nope", "--l", "5", "--f", "u", "--a", "v"),
    ("bracket", "--l", "5", "--f", "u", "--a", "v"),
    ("bracket", "--preset", "torus2", "--f", "u^5", "--a", "v"),
    ("decompose", "--n", "0", "--l", "3"),
    ("bwb", "--l", "4", "--lambda-min", "0", "--lambda-max", "1"),
    ("cohomology", "--n", "1", "--l", "3", "--jmin", "0", "--jmax", "1", "--jobs", "0"),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_2(argv):
    code, _, _ = invoke(*argv)
    assert code == EXIT_USAGE


def test_allow_even():
    code, out, _ = invoke("bracket", "--preset", "torus2", "--l", "4", "--allow-even", "--f", "u^4", "--a", "v^4")
    assert code == EXIT_OK and out.startswith("16 * u^4 v^4")


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "semiq", "product-table", "--l", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].split() == ["p", "q", "eps^", "case", "scalar"]
