import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from random import Random

import pytest

from qschur.cli import main
from qschur.hecke import AlgebraContext
from qschur.ring import ScalarContext


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_enum_ssyt_count():
    code, out = run_cli(["enum", "ssyt", "--lambda", "[[2]]", "--m", "[2]",
                         "--r", "1"])
    assert code == 0
    assert out.startswith("count: 3")


def test_enum_nodes_with_note():
    code, out = run_cli(["enum", "nodes", "--lambda", "[[3,1],[2,2],[1]]",
                         "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["count_removable"] == 4
    assert "note" in data


def test_enum_multicomp_count():
    code, out = run_cli(["enum", "multicomp", "--n", "2", "--m", "[2,2]",
                         "--format", "json"])
    assert code == 0
    assert json.loads(out)["count"] == 10


def test_verify_basis_exit_zero():
    code, out = run_cli(["verify", "basis", "--lambda", "[[2]]", "--m", "[2]",
                         "--r", "1", "--format", "json", "--seed", "5"])
    assert code == 0
    data = json.loads(out)
    assert data["certified"] and data["rank"] == 3
    assert data["flags"] == {"m_convention": "plain", "y_convention": "plain"}


def test_verify_relations():
    code, out = run_cli(["verify", "relations", "--n", "2", "--r", "2",
                         "--samples", "40", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["pass"] and data["closure_dim"] == 8


def test_verify_branch():
    code, out = run_cli(["verify", "branch", "--lambda", "[[1],[1]]",
                         "--m", "[2,2]", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["identity_holds"]
    assert sum(l["quotient_dim"] for l in data["layers"]) == 4
    assert sorted(l["weyl_dim"] for l in data["layers"]) == [1, 3]


def test_verify_lemma24():
    code, out = run_cli(["verify", "lemma24", "--n", "2", "--r", "2",
                         "--format", "json"])
    assert code == 0
    assert json.loads(out)["pass"]


def test_compute_z():
    code, out = run_cli(["compute", "z", "--lambda", "[[2]]", "--r", "1",
                         "--m", "[2]"])
    assert code == 0
    assert out.strip() == ("(1) * L1^0*L2^0 * T[1,2] + "
                           "(1) * L1^0*L2^0 * T[2,1]")


def test_compute_L_basis_term():
    code, out = run_cli(["compute", "L", "--i", "2", "--n", "2", "--r", "2",
                         "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["terms"][0]["c"] == [0, 1]


def test_compute_h_selector():
    code, out = run_cli(["compute", "h", "--lambda", "[[2]]", "--r", "1",
                         "--m", "[2]", "--mu", "[[1,1]]"])
    assert code == 0
    assert "T[" in out
    code, _ = run_cli(["compute", "h", "--lambda", "[[2]]", "--r", "1",
                       "--m", "[2]", "--mu", "[[1,1]]", "--index", "9"])
    assert code == 2


def test_usage_errors_exit_two():
    code, _ = run_cli(["enum", "ssyt", "--lambda", "not json"])
    assert code == 2
    code, _ = run_cli(["verify", "basis", "--m", "[2]", "--r", "1"])
    assert code == 2
    code, _ = run_cli(["verify", "relations", "--n", "2", "--r", "2",
                       "--flags", "m_convention=bogus"])
    assert code == 2


def test_resource_limit_exit_three():
    code, _ = run_cli(["verify", "relations", "--n", "3", "--r", "2",
                       "--max-dim", "10"])
    assert code == 3


def test_wallclock_budget_exit_three():
    code, _ = run_cli(["verify", "relations", "--n", "2", "--r", "2",
                       "--samples", "5", "--max-seconds", "0"])
    assert code == 3


def test_determinism_byte_identical():
    argv = ["verify", "basis", "--lambda", "[[1],[1]]", "--m", "[2,2]",
            "--r", "2", "--format", "json", "--seed", "9"]
    outs = {run_cli(argv)[1] for _ in range(3)}
    assert len(outs) == 1
    argv2 = ["enum", "ssyt", "--lambda", "[[1],[1]]", "--m", "[2,2]",
             "--r", "2", "--format", "json"]
    assert run_cli(argv2)[1] == run_cli(argv2)[1]


def test_env_seed_fallback(monkeypatch):
    argv = ["verify", "basis", "--lambda", "[[2]]", "--m", "[2]", "--r", "1",
            "--format", "json"]
    monkeypatch.setenv("QSCHUR_SEED", "13")
    _, with_env = run_cli(argv)
    monkeypatch.delenv("QSCHUR_SEED")
    _, explicit = run_cli(argv + ["--seed", "13"])
    assert with_env == explicit


def test_console_script_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "qschur.cli", "enum", "multicomp", "--n", "2",
         "--m", "[2]", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 3


def test_roundtrip_thousand_random_elements():
    specs = [(2, 2), (3, 2), (2, 1)]
    per_ctx = 334
    for n, r in specs:
        ctx = AlgebraContext(n, r)
        rng = Random(1000 + n * 10 + r)
        for _ in range(per_ctx):
            e = ctx.random_element(rng)
            assert ctx.parse(e.text()) == e
            assert ctx.from_json(e.to_json()) == e
            assert ctx.from_json(json.dumps(e.to_json())) == e
