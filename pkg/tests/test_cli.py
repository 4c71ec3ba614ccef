import json

import pytest

from fockshuffle import cli
from fockshuffle.dump import build, dump
from fockshuffle.report import Check, Report
from fockshuffle.suites import Config, run_suite


def test_relations_suite_size4():
    report = run_suite("relations", Config(max_size=4))
    assert report.passed
    assert report.totals["checks"] == len(report.checks)


def test_all_small_deterministic():
    a = run_suite("all", Config(max_size=3))
    b = run_suite("all", Config(max_size=3))
    assert a.passed
    assert a.dumps() == b.dumps()
    doc = json.loads(a.dumps())
    assert doc["schema"] == 1
    assert doc["params"] == {"max_size": 3, "series_order": 8, "mode": "exact"}


def test_anchor_unique_per_identity():
    report = run_suite("all", Config(max_size=2))
    ids = [c.identity for c in report.checks]
    assert len(ids) == len(set(ids))
    assert all(c.anchor for c in report.checks)


def test_jobs_order_stable():
    serial = run_suite("theta", Config(max_size=3)).dumps()
    parallel = run_suite("theta", Config(max_size=3, jobs=2)).dumps()
    assert serial == parallel


def test_sampled_suite():
    report = run_suite("all", Config(max_size=3, mode="sampled", seed=4))
    assert report.passed
    assert report.params["seed"] == 4


def test_errors():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("theta", Config(max_size=0))
    with pytest.raises(ValueError):
        run_suite("theta", Config(series_order=0))


def test_failing_check_needs_witness():
    with pytest.raises(ValueError):
        Check("x", "anchor", False)
    r = Report("s", {}, [Check("a", "first", True), Check("b", "second", False, {"lam": "[1]"})])
    assert r.first_failure().identity == "b"
    assert r.to_json()["totals"] == {"checks": 2, "pass": 1, "fail": 1}
    assert "seconds" not in json.dumps(r.to_json())


def test_dump_examples(tmp_path):
    e = build("e-matrix", {"r": 0, "n": 2})
    (block,) = e["blocks"]
    assert block["cols"] == ["[2]", "[1,1]"]
    assert block["rows"] == ["[3]", "[2,1]", "[1,1,1]"]
    assert {(x["row"], x["col"]) for x in block["entries"]} == {("[3]", "[2]"), ("[2,1]", "[2]"), ("[2,1]", "[1,1]"), ("[1,1,1]", "[1,1]")}
    assert e["blocks"][0]["entries"][0]["value"] == "(-t1^2) / (t1^3 - t1^2 - t1*t2 + t2)"
    assert build("c-norms", {"max_size": 3})["values"]["[]"] == "1"
    mac = build("macdonald", {"degree": 2})
    entry = next(p for p in mac["polynomials"] if p["partition"] == [1, 1])
    assert entry == {"partition": [1, 1], "basis": "m", "coeffs": {"[1,1]": "1"}}
    path = tmp_path / "k.json"
    text = dump("k-matrix", {"n": 2, "max_size": 3}, path)
    assert path.read_text() == text == dump("k-matrix", {"n": 2, "max_size": 3})
    assert build("psi", {"max_size": 0, "order": 0})["values"]["[]"] == {"+": ["-1"], "-": ["-t1^-1*t2^-1"]}
    with pytest.raises(ValueError):
        build("bogus", {})


def test_dump_io_error(tmp_path):
    with pytest.raises(OSError):
        dump("c-norms", {"max_size": 1}, tmp_path / "missing" / "x.json")


def test_cli_commands(capsys, tmp_path):
    assert cli.main(["verify", "--relation", "2", "--max-size", "3"]) == 0
    assert cli.main(["shuffle", "k-commute", "--m", "1", "--n", "2", "--max-size", "4"]) == 0
    assert cli.main(["shuffle", "wheel", "--gens", "1,0,-1"]) == 0
    assert cli.main(["theta", "verify", "--n", "2", "--max-size", "4"]) == 0
    out = tmp_path / "h.json"
    assert cli.main(["theta", "heisenberg", "--i", "2", "--max-size", "4", "--dump", str(out)]) == 0
    assert json.loads(out.read_text())["shift"] == 2
    capsys.readouterr()
    assert cli.main(["macdonald", "--partition", "[1,1]", "--basis", "m", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"partition": [1, 1], "basis": "m", "coeffs": {"[1,1]": "1"}}
    assert cli.main(["run", "theta", "--max-size", "3", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "PASS"
    assert cli.main(["dump", "c-norms", "--max-size", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == {"[]": "1", "[1]": "1"}


def test_cli_bad_input(capsys):
    assert cli.main(["run", "theta", "--max-size", "0"]) == 2
    with pytest.raises(SystemExit):
        cli.main(["run", "bogus"])
    with pytest.raises(SystemExit):
        cli.main(["macdonald", "--partition", "2,1"])


def test_cli_failure_prints_witness(capsys, monkeypatch):
    bad = Report("x", {}, [Check("broken", "anchor", False, {"lam": "[2]"})])
    monkeypatch.setattr(cli, "run_suite", lambda name, cfg: bad)
    assert cli.main(["run", "theta"]) == 1
    err = capsys.readouterr().err
    assert "broken" in err and "[2]" in err
