import csv
import io
import json
from pathlib import Path

import pytest

from twistinv.cli import RunConfig, main

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ppm_a2(capsys):
    code, out, _ = run(capsys, "ppm", "--system", str(SYSTEMS / "a2-id.json"), "--maxlen", "3",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["y", "w", "l_y", "l_w", "Ppm", "P", "Pplus", "Pminus"]
    assert len({r["w"] for r in rows}) == 4
    assert all(r["Ppm"] == "1" for r in rows)


def test_verify_all_b2(capsys):
    code, out, _ = run(capsys, "verify", "all", "--system", str(SYSTEMS / "b2.json"),
                       "--maxlen", "4")
    assert code == 0
    assert all(r["ok"] for r in json.loads(out))


def test_scan_a2_affine(capsys):
    code, out, _ = run(capsys, "scan-8-4", "--system", str(SYSTEMS / "a2-affine-swap.json"),
                       "--maxlen", "11", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["dprime_word", "d_word", "ppm", "kl_neg_u", "equal", "N_u1"]
    assert {"1-u", "1-u+u^2"} <= {r["ppm"] for r in rows}
    assert all(r["equal"] == "true" for r in rows)


def test_check_closed_forms_exit_codes(capsys):
    assert run(capsys, "check-8-6", "--system", "A2-affine-swap")[0] == 0
    code, _, err = run(capsys, "check-8-6", "--system", "C2-affine")
    assert code == 2 and "simply laced" in err


def test_output_is_deterministic(tmp_path, capsys):
    outs = []
    for i in range(2):
        p = tmp_path / f"out{i}.csv"
        assert main(["ppm", "--system", "B3", "--format", "csv", "--out", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_star_override(capsys):
    code, out, _ = run(capsys, "enumerate", "--system", "A2", "--star", "1,0")
    assert code == 0
    assert [r["w"] for r in json.loads(out)["rows"]] == ["", "s.t", "t.s", "s.t.s"]
    code, _, err = run(capsys, "enumerate", "--system", "B3", "--star", "2,1,0")
    assert code == 2 and "preserve" in err


@pytest.mark.parametrize("argv", [
    ["bar", "s.t", "--system", "A2"],                 # not a twisted involution
    ["basis", "--system", "A2"],                      # missing argument
    ["verify", "nonsense", "--system", "A2"],
    ["cosets", "x", "--system", "A2"],
    ["scan-8-4", "--system", "A2"],                   # finite group
    ["ppm", "--system", "no-such-system"],
    ["enumerate", "--system", "A1-affine", "--maxlen", "9", "--cap", "3"],
    ["basis", "s", "--system", "A2", "--format", "csv"],
])
def test_domain_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "--system", "A2"])
    assert exc.value.code == 2


def test_malformed_descriptor(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[1, 3], [2, 1]]}')
    code, _, err = run(capsys, "enumerate", "--system", str(bad))
    assert code == 2 and "symmetric" in err
    bad.write_text('{"matrix": [[1, "x"], ["x", 1]]}')
    assert run(capsys, "enumerate", "--system", str(bad))[0] == 2
    bad.write_text("{not json")
    assert run(capsys, "enumerate", "--system", str(bad))[0] == 2


def test_verification_failure_exits_1(monkeypatch, capsys):
    from twistinv import verify
    from twistinv.verify import CheckResult

    def broken(ctx):
        return [CheckResult("bar", "fake", checked=1, failures=1, first="w='s'")]
    monkeypatch.setitem(verify.SUITES, "bar", broken)
    code, out, _ = run(capsys, "verify", "bar", "--system", "A1", "--format", "csv")
    assert code == 1 and "FAIL" in out and "w='s'" in out


def test_other_commands(capsys):
    code, out, _ = run(capsys, "cosets", "s,t", "--system", "B2")
    recs = json.loads(out)
    assert code == 0 and recs[0]["case_tag"] == "v" and recs[0]["involutions"][0] == ""
    code, out, _ = run(capsys, "basis", "s", "--system", "A1")
    assert json.loads(out)["terms"] == [{"w": "", "coeff": {"offset": -1, "coeffs": [1]}},
                                        {"w": "s", "coeff": {"offset": -1, "coeffs": [1]}}]
    code, out, _ = run(capsys, "bar", "s", "--system", "A1")
    assert code == 0
    code, out, _ = run(capsys, "rpoly", "--system", "A1", "--format", "csv")
    assert "-v^-1+v" in out
    code, out, _ = run(capsys, "kl", "--system", "A3", "--format", "csv")
    assert code == 0 and out.count("1+u") == 6
    code, out, _ = run(capsys, "enumerate", "elements", "--system", "B2")
    assert len(json.loads(out)["rows"]) == 8


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("A1", "ppm", [], maxlen=-1)
    with pytest.raises(ValueError):
        RunConfig("A1", "ppm", [], cap=0)
