import json
import shutil
import subprocess
import sys

import pytest

from laxdist import collate, curry_law, uncurry_nested
from laxdist.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from laxdist.docs import DocumentError, Manifest

import families


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_validate_directory(capsys, fixtures_dir):
    code, out = run(capsys, "validate", fixtures_dir / "rel2")
    assert code == EXIT_OK
    assert out.startswith("validate ")


def test_corrupt_law_names_D5(capsys, fixtures_dir):
    code, out = run(capsys, "check-law", fixtures_dir / "d5", "--name", "d5_corrupt", "--json")
    assert code == EXIT_FAIL
    rep = json.loads(out)
    assert [v["axiom"] for v in rep["violations"]] == ["D5"]


def test_reduced_check_on_the_good_law(capsys, fixtures_dir):
    code, _ = run(capsys, "check-law", fixtures_dir / "d5" / "law_ok.yaml", "--assume-invertible")
    assert code == EXIT_OK


@pytest.mark.parametrize("cmd", ["check-triangle", "collate", "curry", "check-roundtrip", "check-k"])
def test_law_commands_on_trivial_law(capsys, fixtures_dir, cmd):
    code, out = run(capsys, cmd, fixtures_dir / "trivial")
    assert code == EXIT_OK, out


def test_braiding_commands(capsys, fixtures_dir):
    code, out = run(capsys, "check-braiding", fixtures_dir / "monoids", "--name", "z2", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["extra"]["braidings"] == [[[0, 1], [1, 0]]]
    code, _ = run(capsys, "check-braiding", fixtures_dir / "monoids", "--name", "left_zero_with_unit")
    assert code == EXIT_FAIL


def test_enumeration_commands_match_library(capsys, fixtures_dir):
    code, out = run(capsys, "enumerate-monads", fixtures_dir / "rel2" / "rel2.yaml", "--json")
    assert code == EXIT_OK
    assert [m["t"] for m in json.loads(out)["extra"]["monads"]] == [F.one(0) for F in families.rel2_monads()]
    code, out = run(capsys, "enumerate-laws", fixtures_dir / "rel2" / "rel2.yaml", "--json")
    assert code == EXIT_OK
    got = json.loads(out)["extra"]["laws"]
    assert got == [[list(r) for r in s.sigma] for s in families.rel2_laws()]


def test_input_and_budget_exit_codes(capsys, fixtures_dir, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.yaml")[0] == EXIT_INPUT
    bad = tmp_path / "bad.yaml"
    bad.write_text("kind: category\nname: x\ngenerator: nonsense(3)\n")
    assert run(capsys, "validate", bad)[0] == EXIT_INPUT
    code, out = run(capsys, "enumerate-monads", fixtures_dir / "rel2" / "rel2.yaml", "--budget", 10)
    assert code == EXIT_BUDGET
    assert "budget exceeded" in out


def _workdir(fixtures_dir, tmp_path):
    # written documents name categories from the rest of the manifest directory
    work = tmp_path / "rel2"
    shutil.copytree(fixtures_dir / "rel2", work)
    for stale in ("collated_law5.yaml", "curried_law5.yaml"):
        (work / stale).unlink()
    return work


def test_collate_output_round_trips(capsys, fixtures_dir, tmp_path):
    work = _workdir(fixtures_dir, tmp_path)
    out_file = work / "collated.yaml"
    code, _ = run(capsys, "collate", fixtures_dir / "rel2" / "laws.yaml", "--name", "rel2.law5", "-o", out_file)
    assert code == EXIT_OK
    m, _ = Manifest.from_path(fixtures_dir / "rel2")
    s = m.get("rel2.law5", "law")
    written, _ = Manifest.from_path(work)
    assert written.get("rel2.law5.collated", "functor") == collate(s)


def test_curry_output_uncurries(capsys, fixtures_dir, tmp_path):
    work = _workdir(fixtures_dir, tmp_path)
    out_file = work / "curried.yaml"
    code, _ = run(capsys, "curry", fixtures_dir / "rel2" / "laws.yaml", "--name", "rel2.law5", "-o", out_file)
    assert code == EXIT_OK
    code, _ = run(capsys, "uncurry", work, "--name", "rel2.law5.curried")
    assert code == EXIT_OK
    m, _ = Manifest.from_path(fixtures_dir / "rel2")
    s = m.get("rel2.law5", "law")
    written, _ = Manifest.from_path(work)
    assert uncurry_nested(written.get("rel2.law5.curried", "nested")) == s
    assert curry_law(s).Q(0) == s.M[0]


def test_committed_fixtures_match_fresh_output(capsys, fixtures_dir, tmp_path):
    for cmd, stem in [("collate", "collated_law5"), ("curry", "curried_law5")]:
        out_file = tmp_path / f"{stem}.yaml"
        run(capsys, cmd, fixtures_dir / "rel2" / "laws.yaml", "--name", "rel2.law5", "-o", out_file)
        assert out_file.read_text() == (fixtures_dir / "rel2" / f"{stem}.yaml").read_text()


def test_corrupt_then_check(capsys, fixtures_dir, tmp_path):
    out_file = tmp_path / "c.yaml"
    code, out = run(capsys, "corrupt", fixtures_dir / "trivial" / "trivial.yaml", "--name", "trivial", "-o", out_file, "--json")
    assert code == EXIT_OK
    change = json.loads(out)["extra"]["corrupted"]
    assert change["old"] != change["new"]
    text = out_file.read_text()
    assert "trivial" in text


def test_unknown_document_name(fixtures_dir):
    m, _ = Manifest.from_path(fixtures_dir / "trivial")
    with pytest.raises(DocumentError):
        m.get("nothing-here")


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "rel2"],
        ["check-law", "d5", "--name", "d5_corrupt"],
        ["enumerate-laws", "rel2/rel2.yaml", "--json"],
        ["check-braiding", "monoids", "--name", "z2_labelled"],
    ],
)
def test_output_is_byte_identical_across_runs_and_threads(capsys, fixtures_dir, argv):
    argv = [str(fixtures_dir / argv[1]) if i == 1 else a for i, a in enumerate(argv)]
    outs = []
    for threads in (1, 1, 4):
        main(argv + ["--threads", str(threads)])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]


def test_console_entry_point(fixtures_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "laxdist.cli", "check-law", str(fixtures_dir / "d5"), "--name", "d5_corrupt"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_FAIL
    assert "first witness for D5" in proc.stdout
