import json

import pytest

from coble.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv)
    return code, json.loads(out)


def test_invariants_dim(capsys):
    code, cert = run_json(capsys, ["invariants", "dim", "--degree", "3"])
    assert code == 0
    assert cert["command"] == "invariants dim"
    assert all(c["pass"] for c in cert["checks"])
    assert {"name", "expected", "provenance", "actual", "pass"} <= \
        set(cert["checks"][0])
    assert {"command", "inputs", "checks", "outputs", "timing_ms",
            "artifact_hash"} <= set(cert)


def test_invariants_basis(capsys):
    code, cert = run_json(capsys, ["invariants", "basis"])
    assert code == 0
    assert len(cert["outputs"]["labels"]) == 43


def test_format_text(capsys):
    code, out, _ = run(capsys, ["enum", "zagier", "--format", "text"])
    assert code == 0
    assert out.startswith("command: enum zagier")
    assert "[PASS]" in out


def test_prym_check(capsys):
    code, cert = run_json(capsys, ["prym", "check"])
    assert code == 0 and all(c["pass"] for c in cert["checks"])


def test_prym_genus(capsys):
    code, cert = run_json(capsys, ["prym", "genus", "--n", "3", "--g", "2"])
    assert code == 0
    assert cert["outputs"]["genus"] == 1


def test_enum_commands(capsys):
    for argv in (["enum", "degree-dual"], ["enum", "quadric-count"],
                 ["enum", "verlinde", "--kmax", "4"]):
        code, cert = run_json(capsys, argv)
        assert code == 0, argv
        assert all(c["pass"] for c in cert["checks"]), argv


def test_hesse_dual_with_small_oracle(capsys):
    code, cert = run_json(capsys, ["hesse", "dual", "--lambda", "2",
                                   "--oracle-prime", "13"])
    assert code == 0
    assert cert["outputs"]["oracle"]["points"] == 18


def test_hesse_dual_singular_reduction_skips(capsys):
    code, cert = run_json(capsys, ["hesse", "dual", "--lambda", "3",
                                   "--oracle-prime", "13"])
    assert code == 0
    assert cert["outputs"]["oracle"] == "skipped_singular_reduction"


def test_nu_charts(capsys):
    code, cert = run_json(capsys, ["nu", "charts"])
    assert code == 0
    assert len(cert["outputs"]["charts"]) == 40


def test_nu_rank(capsys):
    code, cert = run_json(capsys, ["nu", "rank"])
    assert code == 0
    assert cert["outputs"]["rank"] == 39
    assert cert["outputs"]["kernel_dimension"] == 4
    assert cert["outputs"]["verdict"].startswith("text: rank 39")
    assert "kernel" not in cert["outputs"]


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["nu", "rank", "--mode", "bogus"])
    assert exc.value.code == 2


def test_internal_error(capsys):
    code, out, err = run(capsys, ["invariants", "dim", "--degree", "4"])
    assert code == 3
    assert "internal error" in err


def test_artifact_hash_deterministic(capsys):
    _, cert1 = run_json(capsys, ["prym", "check"])
    _, cert2 = run_json(capsys, ["prym", "check"])
    assert cert1["artifact_hash"] == cert2["artifact_hash"]
