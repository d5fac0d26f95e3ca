"""Command-line interface: reports, exit codes, determinism."""

import json

import pytest

from quintic_garnier.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, (json.loads(out) if out.strip() else None)


def test_orbit_pure_report(capsys, tmp_path):
    out = tmp_path / "o.json"
    rc, doc = run_cli(capsys, "orbit", "rho1", "--pure", "--out", str(out))
    assert rc == 0
    assert doc["results"] == {"size": 4, "status": "closed"}
    assert all(c["status"] == "pass" for c in doc["checks"])
    data = json.loads(out.read_text())
    assert data["size"] == 4 and data["variables"] == ["u", "v"]


def test_orbit_extended_size_check(capsys):
    rc, doc = run_cli(capsys, "orbit", "rho4", "--extended")
    assert rc == 0
    assert doc["results"]["size"] == 40
    names = {c["name"]: c["status"] for c in doc["checks"]}
    assert names["expected_size"] == "pass"


def test_orbit_identity(capsys):
    rc, doc = run_cli(capsys, "orbit", "identity", "--pure")
    assert rc == 0 and doc["results"]["size"] == 1


def test_orbit_cutoff_exit_code(capsys):
    rc, doc = run_cli(capsys, "orbit", "rho1", "--pure", "--cutoff", "2")
    assert rc == 2
    assert doc["results"]["status"] == "cutoff"


def test_orbit_degenerate_specialization_fails_size_check(capsys):
    rc, doc = run_cli(capsys, "orbit", "rho1", "--pure", "--at", "u=1,v=1")
    assert rc == 1


def test_orbit_unknown_family_is_usage_error(capsys):
    rc, _ = run_cli(capsys, "orbit", "rho9", "--pure")
    assert rc == 3


def test_compare_membership(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    rc, _ = run_cli(capsys, "orbit", "rho2", "--extended", "--out", str(a))
    assert rc == 0
    rc, _ = run_cli(capsys, "orbit", "rho3", "--pure", "--out", str(b))
    assert rc == 0
    rc, doc = run_cli(capsys, "compare", str(a), str(b), "--subst", "u=-s,v=s")
    assert rc == 0
    assert doc["results"]["relation"] == "a_contains_b"
    rc, doc = run_cli(capsys, "compare", str(a), str(a))
    assert rc == 0 and doc["results"]["relation"] == "equal"


def test_compare_malformed_substitution(capsys, tmp_path):
    a = tmp_path / "a.json"
    run_cli(capsys, "orbit", "rho3", "--pure", "--out", str(a))
    rc, _ = run_cli(capsys, "compare", str(a), str(a), "--subst", "s=s+1")
    assert rc == 3


def test_pure_orbits_disjoint_via_cli(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, "orbit", "rho1", "--pure", "--out", str(a))
    run_cli(capsys, "orbit", "rho2", "--pure", "--out", str(b))
    rc, doc = run_cli(capsys, "compare", str(a), str(b))
    assert rc == 0 and doc["results"]["relation"] == "disjoint"


@pytest.mark.parametrize("suite,expect_warn", [
    ("relations", True), ("residues", False), ("pullbacks", False),
])
def test_verify_suites(capsys, suite, expect_warn):
    rc, doc = run_cli(capsys, "verify", suite)
    assert rc == 0
    assert doc["results"]["fail"] == 0
    assert (doc["results"]["warning"] > 0) == expect_warn


def test_report_determinism(capsys):
    rc1 = main(["verify", "garnier"])
    out1 = capsys.readouterr().out
    rc2 = main(["verify", "garnier"])
    out2 = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_timing_flag_adds_field(capsys):
    rc, doc = run_cli(capsys, "orbit", "identity", "--pure", "--timing")
    assert rc == 0 and "timing" in doc


def test_rep_file_input(capsys, tmp_path):
    rep = {
        "variables": ["u", "v"],
        "matrices": [
            ["1*v^1", "0", "0", "1*v^-1"],
            ["1*u^1", "0", "0", "1*u^-1"],
            ["0", "1", "-1", "0"],
            ["0", "1*u^2", "-1*u^-2", "0"],
        ],
    }
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(rep))
    rc, doc = run_cli(capsys, "orbit", "--rep-file", str(path), "--pure")
    assert rc == 0
    assert doc["results"]["size"] == 4


def test_missing_family_is_usage_error(capsys):
    rc, _ = run_cli(capsys, "orbit", "--pure")
    assert rc == 3


def test_env_var_controls_default_cutoff(capsys, monkeypatch):
    monkeypatch.setenv("QUINTIC_GARNIER_CUTOFF", "2")
    rc, doc = run_cli(capsys, "orbit", "rho1", "--pure")
    assert rc == 2 and doc["results"]["status"] == "cutoff"


def test_verify_garnier_emits_all_fields(capsys):
    rc, doc = run_cli(capsys, "verify", "garnier")
    assert rc == 0
    fields = next(c for c in doc["checks"] if c["name"] == "garnier_fields")
    assert {"t1", "t2", "Sq", "Pq", "Sp", "gamma", "agreement"} <= \
        set(fields["details"])
