"""CLI subcommands: CHECK line grammar, exit codes, and JSON output."""

import json

import pytest

from gl2tors import catalog, cli
from gl2tors.cli import main
from gl2tors.verify import VerificationReport


def assert_usage_exit(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 64


def test_no_command_is_usage_error():
    assert_usage_exit([])
    assert_usage_exit(["bogus"])


def test_torsion(capsys):
    assert main(["torsion", "[1,0,1,-1,0]"]) == 0
    out = capsys.readouterr().out
    assert "torsion: C6" in out
    assert "CHECK torsion pass curve=[1,0,1,-1,0] structure=C6" in out


def test_torsion_trivial_and_split(capsys):
    assert main(["torsion", "[0,0,1,-1,0]"]) == 0
    assert "torsion: C1 (trivial)" in capsys.readouterr().out
    assert main(["torsion", "[0,0,0,-1,0]"]) == 0
    assert "torsion: C2+C2" in capsys.readouterr().out


def test_torsion_bad_curve():
    assert_usage_exit(["torsion", "[1,2]"])


def test_jmap(capsys):
    assert main(["jmap", "Et", "-6"]) == 0
    out = capsys.readouterr().out
    assert "Et(-6) = -12288000" in out
    assert "CHECK jmap.Et pass x=-6 value=-12288000" in out
    assert main(["jmap", "Et", "3"]) == 0
    assert "Et(3) = pole" in capsys.readouterr().out


def test_jmap_json(capsys):
    assert main(["jmap", "Et", "-6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"label": "Et", "x": "-6", "value": "-12288000"}


def test_jmap_usage_errors():
    assert_usage_exit(["jmap", "nope", "0"])
    assert_usage_exit(["jmap", "Et", "zz"])


def test_group_builtin(capsys):
    assert main(["group", "3B.1.1"]) == 0
    out = capsys.readouterr().out
    assert "order: 6" in out
    assert ("CHECK group.3B.1.1 pass order=6 index=8 minus_id=False "
            "applicable=False") in out


def test_group_json(capsys):
    assert main(["group", "9B0-9a", "--json"]) == 0
    facts = json.loads(capsys.readouterr().out)
    assert facts["order"] == 324
    assert facts["level"] == 9
    assert facts["minus_id"] is True
    assert facts["applicable"] is True
    assert "class" not in facts  # only reported at prime levels
    assert main(["group", "3B.1.1", "--json"]) == 0
    facts3 = json.loads(capsys.readouterr().out)
    assert facts3["class"] == "borel-contained"
    assert facts3["stable_lines"] == 1


def test_group_inline(capsys):
    assert main(["group", "[[1,1,0,1]]", "--level", "9"]) == 0
    assert "order: 9" in capsys.readouterr().out
    assert_usage_exit(["group", "[[1,1,0,1]]"])  # missing --level
    assert_usage_exit(["group", "nosuchgroup"])


def test_search_index_mode3(capsys):
    assert main(["search-index", "9H0-9b", "--mode", "3"]) == 0
    out = capsys.readouterr().out
    assert "CHECK search-index.9H0-9b.mode3 pass counts=0,0,1" in out


def test_search_index_mode6(capsys):
    assert main(["search-index", "9H0-9b", "--mode", "6"]) == 0
    out = capsys.readouterr().out
    assert ("CHECK search-index.9H0-9b.mode6 pass witnesses=36 "
            "verified=True") in out
    assert "sample [('9H0-9b', (1, 2))" in out


def test_search_index_guards(tmp_path, capsys):
    assert_usage_exit(["search-index", "3B.1.1", "--mode", "3"])
    assert_usage_exit(["search-index", "9H0-9b"])  # --mode is required
    cat = tmp_path / "cat.txt"
    cat.write_text("nominus 9 [[1,1,0,1]]\n")
    assert_usage_exit(["search-index", "nominus", "--mode", "6",
                       "--catalog", str(cat)])
    assert main(["search-index", "nominus", "--mode", "3",
                 "--catalog", str(cat)]) == 0
    assert ("CHECK search-index.nominus.mode3 pass counts=1"
            in capsys.readouterr().out)


def test_search_index_missing_catalog():
    with pytest.raises(SystemExit) as exc:
        main(["search-index", "x", "--mode", "3",
              "--catalog", "/nonexistent/cat.txt"])
    assert exc.value.code == 2


def test_identify(capsys):
    assert main(["identify", "[0,0,1,-1,0]", "--prime-bound", "300"]) == 0
    out = capsys.readouterr().out
    assert "consistent-with: GL2(F3)" in out
    assert "eliminated: 3B.1.1 (class (1, 2) at p=2)" in out
    assert ("CHECK identify pass curve=[0,0,1,-1,0] level=3 "
            "survivors=GL2(F3)") in out


def test_identify_level2(capsys):
    assert main(["identify", "[0,0,1,-1,0]", "--level", "2",
                 "--prime-bound", "100"]) == 0
    out = capsys.readouterr().out
    assert "consistent-with: GL2(F2)" in out
    assert "eliminated: 2B (class (1, 1) at p=3)" in out


def test_identify_json(capsys):
    assert main(["identify", "[0,0,1,-1,0]", "--json",
                 "--prime-bound", "300"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["survivors"] == ["GL2(F3)"]
    assert data["eliminated"][0] == ["3B.1.1", 2, [1, 2]]
    assert_usage_exit(["identify", "[9,9]"])


def test_fiber_search(capsys):
    assert main(["fiber-search", "3Cs.1.1", "9B0-9a", "--height", "8"]) == 0
    out = capsys.readouterr().out
    assert "(-3, -3) finite j=0" in out
    assert "(0, 0) pole" in out
    assert ("CHECK fiber-search.3Cs.1.1x9B0-9a evidence-only height=8 "
            "(-3,-3):finite (-1,-3):finite (0,0):pole") in out
    assert_usage_exit(["fiber-search", "3Cs.1.1", "nope"])


def test_fiber_search_json(capsys):
    assert main(["fiber-search", "3Cs.1.1", "9B0-9a", "--height", "8",
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["curve"] == "fiber(3Cs.1.1,9B0-9a)"
    assert data["points"][0] == {"s": "-3", "t": "-3", "kind": "finite",
                                 "j": "0"}


def test_curve_search(capsys):
    assert main(["curve-search", "y^2 + (x^3 + 1)*y = -9*x^3",
                 "--height", "20"]) == 0
    out = capsys.readouterr().out
    assert "(-1, -3)" in out
    assert "CHECK curve-search evidence-only height=20 points=4" in out
    assert main(["curve-search", "y^2 = x^3", "--height", "2"]) == 0
    assert "points=3" in capsys.readouterr().out


def test_curve_search_bad_model():
    assert_usage_exit(["curve-search", "y^3 = x"])
    assert_usage_exit(["curve-search", "x^2"])


def _stub_reports(ok: bool):
    return [VerificationReport("alpha", "pass" if ok else "fail", "x=1", 0.0),
            VerificationReport("beta", "evidence-only", "y=2", 0.0)]


def test_verify_all_stubbed(monkeypatch, capsys, tmp_path):
    seen = {}

    def fake_run_all(height, prime_bound, catalog_text):
        seen.update(height=height, prime_bound=prime_bound,
                    catalog_text=catalog_text)
        return _stub_reports(True)

    monkeypatch.setattr(cli, "run_all", fake_run_all)
    cat = tmp_path / "cat.txt"
    cat.write_text("extra 9 [[1,1,0,1]]\n")
    assert main(["verify-all", "--height", "7", "--catalog", str(cat)]) == 0
    out = capsys.readouterr().out
    assert "CHECK alpha pass" in out
    assert "CHECK beta evidence-only" in out
    assert "2/2 checks ok" in out
    assert seen["height"] == 7
    assert seen["catalog_text"].startswith("extra 9")

    monkeypatch.setattr(cli, "run_all",
                        lambda **kw: _stub_reports(False))
    assert main(["verify-all"]) == 1


def test_verify_all_json_stubbed(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_all", lambda **kw: _stub_reports(True))
    assert main(["verify-all", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [c["check_id"] for c in data["checks"]] == ["alpha", "beta"]
    assert data["checks"][0]["status"] == "pass"


def test_verify_all_catalog_errors(tmp_path, capsys):
    assert main(["verify-all", "--catalog", "/nonexistent/cat.txt"]) == 2
    assert "cannot read catalog" in capsys.readouterr().err
    bad = tmp_path / "bad.txt"
    bad.write_text("zzz\n")
    assert main(["verify-all", "--catalog", str(bad)]) == 2
    assert "bad catalog" in capsys.readouterr().err


def test_verify_all_detects_mutated_table(monkeypatch, capsys):
    # Corrupting a built-in generator table must fail the battery.
    monkeypatch.setitem(catalog.NAMED_GROUP_GENERATORS, "3B.1.1",
                        (3, ((1, 1, 0, 1),)))
    assert main(["verify-all"]) == 1
    assert "CHECK group-orders fail" in capsys.readouterr().out
