import json

import pytest

from quatcover import cli
from quatcover.report import Check, VerificationReport, emit_report, render_json, render_text
from quatcover.suites import CHECK_INDEX, SUITES, run_suite


def test_every_emitted_check_is_indexed():
    for params in ({}, {"alpha": "1"}, {"alpha": "symbolic"}):
        rep = run_suite("all", params)
        for c in rep.checks:
            assert CHECK_INDEX.get(c.id) == c.paper_anchor, c.id
    assert all(CHECK_INDEX.values())


def test_suite_selection_and_errors():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("cubic", {})
    rep = run_suite("cubic", {"alpha": "1/1"})
    assert rep.get("cubic.singular_locus").details["count"] == 10
    tower = run_suite("tower")
    assert len(tower.get("tower.admissible_cases").details["cases"]) == 5
    assert set(SUITES) >= {"quaternion", "lattice", "homology", "tower", "cubic", "all"}


def test_json_determinism_and_schema():
    a = render_json(run_suite("lattice"))
    b = render_json(run_suite("lattice"))
    assert a == b
    data = json.loads(a)
    assert data["schema_version"] == "1.0"
    assert all("timing_ms" not in c for c in data["checks"])
    with_t = json.loads(render_json(run_suite("quaternion"), timings=True))
    assert all("timing_ms" in c for c in with_t["checks"])


def test_text_has_anchors():
    text = render_text(run_suite("quaternion"))
    assert "orders/unit-groups" in text and text.rstrip().splitlines()[-1].startswith("summary:")


def test_exception_becomes_failure():
    rep = VerificationReport("x")

    def boom():
        raise RuntimeError("bad")

    rep.run("x.boom", "plumbing", boom)
    assert rep.get("x.boom").status == "fail" and not rep.ok
    with pytest.raises(ValueError):
        Check("x", "plumbing", "maybe")


def test_cli_exit_codes(tmp_path, capsys, monkeypatch):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "tower", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["fail"] == 0
    assert cli.main(["verify", "cubic"]) == 2
    assert cli.main(["verify", "cubic", "--alpha", "2", "--format", "text"]) == 0
    assert "cubic.singular_locus" in capsys.readouterr().out

    failing = VerificationReport("forced")
    failing.add("forced.fail", "plumbing", False)
    monkeypatch.setattr(cli, "run_suite", lambda name, params: failing)
    assert cli.main(["verify", "quaternion"]) == 1


def test_emit_report_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit_report(VerificationReport("x"), "yaml")


def test_seed_env(monkeypatch):
    monkeypatch.setenv("QUATCOVER_SEED", "7")
    rep = run_suite("quaternion")
    assert rep.params["seed"] == 7 and rep.get("quaternion.axioms_sampled").status == "pass"
