import subprocess
import sys
from pathlib import Path

import pytest

from duallie.cli import run
from duallie.catalog import CATALOG, catalog
from duallie.fileformat import parse, serialize

L4_TEXT = "name: L4\nbasis: X Y eX eY\nbracket X Y = eX\neps X = eX\neps Y = eY\n"
BAD_EPS = "name: bad\nbasis: U V W\nbracket U V = W\neps U = U\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_validate_ok(write):
    out = run(["validate", write("l4.txt", L4_TEXT)])
    assert out.code == 0 and "valid" in out.text


def test_validate_reports_line_refs(write):
    out = run(["validate", write("bad.txt", BAD_EPS)])
    assert out.code == 1
    assert "eps_nilpotent: (U)" in out.text and "[lines 4]" in out.text


def test_exit_code_contract(write, tmp_path):
    assert run(["validate", write("p.txt", "basis: X Y\nbracket Y X = X\n")]).code == 2
    assert run(["validate", str(tmp_path / "missing.txt")]).code == 2
    assert run(["report", "catalog:nope"]).code == 2
    assert run(["dualize", write("l4.txt", L4_TEXT)]).code == 3
    assert run(["min-abelian-ideal", "catalog:sl2R"]).code == 3
    assert run(["report", write("bad.txt", BAD_EPS)]).code == 1


def test_check_sl2R_dual():
    out = run(["check", "catalog:sl2R_dual", "--levi", "H E F"])
    assert out.code == 0, out.text
    assert "levi_factor: ok 0/1" in out.text
    assert "saturation_of_subspace: info" in out.text


def test_check_transcripts_reproducible():
    a = run(["check", "catalog:L4_paper", "--trials", "30", "--seed", "7"])
    b = run(["check", "catalog:L4_paper", "--trials", "30", "--seed", "7"])
    assert a == b and a.code == 0


def test_check_bad_levi_labels():
    assert run(["check", "catalog:sl2R_dual", "--levi", "H Q"]).code == 2


def test_report_deterministic_and_noted():
    a = run(["report", "catalog:L4_paper", "--seed", "0"])
    b = run(["report", "catalog:L4_paper", "--seed", "0"])
    assert a.code == 0 and a.text == b.text
    assert "rank of eps is 2" in a.text
    t = run(["report", "catalog:L4_paper", "--format", "tree"])
    assert "excluded: true" in t.text and "\n  rank: 2" in t.text


def test_dualize_writes_canonical(tmp_path):
    out = tmp_path / "d.txt"
    res = run(["dualize", "catalog:sl2R", "-o", str(out), "--name", "sl2R_dual"])
    assert res.code == 0
    assert parse(out.read_text()).same_structure(catalog("sl2R_dual"))
    assert out.read_text() == serialize(catalog("sl2R_dual"))


def test_catalog_commands():
    lst = run(["catalog", "list"])
    assert lst.code == 0 and "L4_paper" in lst.text and "TnD2:n" in lst.text
    show = run(["catalog", "show", "heis3"])
    assert show.text + "\n" == serialize(catalog("heis3"))
    assert run(["catalog", "show"]).code == 2
    assert run(["catalog", "show", "TnD2:2"]).code == 0


def test_line_ideals_output():
    out = run(["find-line-ideals", "catalog:e2_dual"])
    assert out.code == 0
    assert out.text.splitlines() == ["e2_dual: conclusive=true", "no one-dimensional ideals over Q"]
    h = run(["find-line-ideals", "catalog:heis3"])
    assert "line W" in h.text
    assert "all lines are ideals" in run(["find-line-ideals", "catalog:abelian:2"]).text


def test_min_ideal_output():
    out = run(["min-abelian-ideal", "catalog:e2_dual"])
    assert out.code == 0 and "dim 2" in out.text and "basis: eP1, eP2" in out.text


def test_engel_commands(write):
    ok = run(["engel", write("m.txt", "rank: 2\nmatrix N\n0 1+e\n0 0\nmatrix E\ne 0\n0 e\n")])
    assert ok.code == 0 and ok.text.startswith("basis change g:")
    bad = run(["engel", write("n.txt", "rank: 2\nmatrix A\n1 0\n0 0\n")])
    assert bad.code == 3 and "not nilpotent: A" in bad.text
    stuck = run(["engel", write("s.txt", "rank: 2\nmatrix M\n0 e\n1 0\n")])
    assert stuck.code == 3
    assert run(["engel", write("x.txt", "rank: 2\nmatrix M\n0 z\n1 0\n")]).code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "duallie", "validate", "catalog:heis3"], capture_output=True, text=True)
    assert res.returncode == 0 and "heis3: valid" in res.stdout
    res = subprocess.run([sys.executable, "-m", "duallie", "report", "catalog:nope"], capture_output=True, text=True)
    assert res.returncode == 2 and res.stderr.startswith("error:")


GOLDENS = Path(__file__).resolve().parent.parent / "docs" / "goldens"


@pytest.mark.parametrize("name", list(CATALOG))
def test_tree_report_matches_golden(name):
    golden = GOLDENS / (name.replace(":", "_") + ".tree")
    out = run(["report", f"catalog:{name}", "--format", "tree", "--seed", "0"])
    assert out.text + "\n" == golden.read_text()
