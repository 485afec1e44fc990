"""Command-line interface: subcommands, exit codes, JSON stability, batch."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from bordercert import RunConfig, main
from bordercert.monomial import ArgumentError

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# RunConfig


def test_runconfig_requires_exactly_one_locator():
    with pytest.raises(ArgumentError):
        RunConfig(subcommand="inspect")
    with pytest.raises(ArgumentError):
        RunConfig(subcommand="inspect", signature="5,2,3,3,1", shape="5,2,2,3")
    config = RunConfig(subcommand="inspect", signature="5,2,3,3,1")
    assert config.trials == 3 and config.seed == 1 and config.field == "exact"


def test_runconfig_resolves_shape():
    config = RunConfig(subcommand="inspect", shape="5,2,2,3")
    assert config.resolved_signature().as_tuple() == (5, 2, 3, 3, 1)


def test_runconfig_rejects_bad_values():
    with pytest.raises(ArgumentError):
        RunConfig(subcommand="certify", signature="5,2,3,3,1", field="float")
    with pytest.raises(ArgumentError):
        RunConfig(subcommand="certify", signature="5,2,3,3,1", trials=0)
    with pytest.raises(ArgumentError):
        RunConfig(subcommand="inspect", signature="5,2,3").resolved_signature()


# ---------------------------------------------------------------------------
# modify


def test_modify_matches_golden(capsys, tmp_path):
    dump = tmp_path / "dump.txt"
    code, out, _ = run(
        ["modify", "--signature", "3,4,6,2,1", "--dump-targets", str(dump)], capsys
    )
    golden = (GOLDEN / "modify_3_4_6_2_1.txt").read_text()
    assert code == 0
    assert out == golden
    assert dump.read_text() == golden


def test_modify_second_golden(capsys):
    code, out, _ = run(["modify", "--signature", "5,2,3,3,0"], capsys)
    assert code == 0
    assert out == (GOLDEN / "modify_5_2_3_3_0.txt").read_text()


# ---------------------------------------------------------------------------
# inspect


def test_inspect_shape_conversion(capsys, tmp_path):
    out_json = tmp_path / "info.json"
    code, out, _ = run(
        ["inspect", "--shape", "5,2,2,3", "--json", str(out_json)], capsys
    )
    assert code == 0
    assert "(5, 2, 3, 3, 1)" in out
    assert "dimU       59" in out
    info = json.loads(out_json.read_text())
    assert info["signature"] == [5, 2, 3, 3, 1]
    assert info["mu"] == 13


# ---------------------------------------------------------------------------
# verify / tangent


def test_verify_symbolic_ok(capsys):
    code, out, _ = run(["verify", "--signature", "4,3,4,2,1"], capsys)
    assert code == 0
    assert "symbolic border-basis check: ok" in out


def test_tangent_single_specialization(capsys):
    code, out, _ = run(
        ["tangent", "--signature", "5,2,3,3,1", "--seed", "2", "--field", "prime"],
        capsys,
    )
    assert code == 0
    assert "tangentDim 59" in out
    assert "dimU       59" in out


# ---------------------------------------------------------------------------
# certify


def test_certify_json_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        code, out, _ = run(
            [
                "certify",
                "--signature",
                "5,2,3,3,1",
                "--trials",
                "2",
                "--seed",
                "9",
                "--json",
                str(path),
                "--no-timings",
            ],
            capsys,
        )
        assert code == 0
        assert "ELEMENTARY_CERTIFIED" in out
    assert paths[0].read_bytes() == paths[1].read_bytes()
    payload = json.loads(paths[0].read_text())
    assert "timings" not in payload
    assert payload["verdict"] == "ELEMENTARY_CERTIFIED"


def test_certify_inconclusive_exit_code(capsys):
    code, out, _ = run(
        ["certify", "--signature", "5,2,3,3,1", "--trials", "1", "--field", "prime"],
        capsys,
    )
    assert code == 3
    assert "INCONCLUSIVE" in out


# ---------------------------------------------------------------------------
# exit codes and argument handling


def test_argument_error_exit_codes(capsys):
    assert run(["inspect", "--signature", "9,9,9,9,9"], capsys)[0] == 2
    assert run(["inspect", "--signature", "1,2"], capsys)[0] == 2
    assert run(["inspect"], capsys)[0] == 2
    assert run(["inspect", "--signature", "5,2,3,3,1", "--shape", "5,2,2,3"], capsys)[0] == 2
    assert run(["no-such-command"], capsys)[0] == 2
    assert run(["batch", "/no/such/file.txt"], capsys)[0] == 2


def test_version_flag(capsys):
    assert run(["--version"], capsys)[0] == 0


def test_prime_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BORDERCERT_PRIME", "2147483659")
    code, out, _ = run(
        ["tangent", "--signature", "5,2,3,3,1", "--field", "prime"], capsys
    )
    assert code == 0
    assert "tangentDim 59" in out
    monkeypatch.setenv("BORDERCERT_PRIME", "not-a-number")
    assert run(["tangent", "--signature", "5,2,3,3,1", "--field", "prime"], capsys)[0] == 2
    monkeypatch.setenv("BORDERCERT_PRIME", "2147483648")
    assert run(["tangent", "--signature", "5,2,3,3,1", "--field", "prime"], capsys)[0] == 2


# ---------------------------------------------------------------------------
# batch


def test_batch_preserves_order_and_isolates_failures(capsys, tmp_path):
    batch_file = tmp_path / "sigs.txt"
    batch_file.write_text("# comment\n5,2,3,3,1\n0,0,0,0,0\n\n5,2,3,3,1\n")
    out_file = tmp_path / "reports.jsonl"
    code, _, _ = run(
        [
            "batch",
            str(batch_file),
            "--trials",
            "1",
            "--jobs",
            "1",
            "--json",
            str(out_file),
            "--no-timings",
        ],
        capsys,
    )
    assert code == 0
    lines = [json.loads(ln) for ln in out_file.read_text().splitlines()]
    assert len(lines) == 3
    assert lines[0]["signature"] == [5, 2, 3, 3, 1]
    assert lines[0]["verdict"] == "ELEMENTARY_CERTIFIED"
    assert lines[1]["signature"] == "0,0,0,0,0"
    assert "ArgumentError" in lines[1]["error"]
    assert lines[2] == lines[0]


def test_batch_parallel_matches_serial(capsys, tmp_path):
    batch_file = tmp_path / "sigs.txt"
    batch_file.write_text("5,2,3,3,1\n3,2,3,2,1\n")
    outputs = []
    for jobs in ("1", "2"):
        out_file = tmp_path / f"out{jobs}.jsonl"
        code, _, _ = run(
            [
                "batch",
                str(batch_file),
                "--trials",
                "1",
                "--jobs",
                jobs,
                "--json",
                str(out_file),
                "--no-timings",
            ],
            capsys,
        )
        assert code == 0
        outputs.append(out_file.read_bytes())
    assert outputs[0] == outputs[1]


# ---------------------------------------------------------------------------
# installed entry point


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "bordercert.cli", "inspect", "--signature", "5,2,3,3,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "dimU       86" in proc.stdout


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
