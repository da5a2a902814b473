"""Command-line behaviour: exit codes, text output, JSON determinism."""

import json
import subprocess
import sys

import pytest

import quiverfold as qf
from quiverfold import cli
from quiverfold.theorems import TheoremReport


@pytest.fixture
def flip_doc(tmp_path):
    q, flip = qf.build_a3_flip()
    path = tmp_path / "flip.json"
    path.write_text(qf.json_dumps(qf.quiver_to_dict(q, flip)))
    return str(path)


@pytest.fixture
def pair_doc(tmp_path):
    vq = qf.make_valued_quiver(["u", "v"], [2, 1], [("u", "v", 2)])
    path = tmp_path / "pair.json"
    path.write_text(qf.json_dumps(qf.valued_to_dict(vq)))
    return str(path)


def test_fold_text(flip_doc, capsys):
    assert cli.main(["fold", flip_doc]) == 0
    out = capsys.readouterr().out
    assert "orbits: {'1': ['1', '3'], '2': ['2']}" in out
    assert "d = [2, 1]" in out
    assert "edge pairs: [[2, 1]]" in out


def test_fold_json_deterministic(flip_doc, capsys):
    assert cli.main(["fold", flip_doc, "--json"]) == 0
    one = capsys.readouterr().out
    assert cli.main(["fold", flip_doc, "--json"]) == 0
    two = capsys.readouterr().out
    assert one == two
    doc = json.loads(one)
    assert doc["d"] == [2, 1]
    assert doc["c_matrix"] == [[2, -1], [-2, 2]]


def test_seed_recorded_in_json(flip_doc, capsys):
    assert cli.main(["fold", flip_doc, "--json", "--seed", "7"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 7


def test_roots_on_valued_input(pair_doc, capsys):
    assert cli.main(["roots", pair_doc, "--max-height", "4"]) == 0
    out = capsys.readouterr().out
    assert "(1, 2)  real" in out
    assert "4 roots up to height 4" in out


def test_roots_requires_height(pair_doc, capsys):
    assert cli.main(["roots", pair_doc]) == 2
    assert "max-height" in capsys.readouterr().err


def test_classify_vector_alias(pair_doc, capsys):
    assert cli.main(["classify", pair_doc, "--dim", "1,2"]) == 0
    via_dim = capsys.readouterr().out
    assert cli.main(["classify", pair_doc, "--vector", "1,2"]) == 0
    via_vector = capsys.readouterr().out
    assert via_dim == via_vector
    assert "(1, 2): real" in via_dim
    assert "word ['v'] applied to simple u" in via_dim


def test_classify_bad_vector_length(pair_doc, capsys):
    assert cli.main(["classify", pair_doc, "--dim", "1,2,0,0"]) == 2
    assert "length 4" in capsys.readouterr().err


def test_indecs_with_end_crosscheck(flip_doc, capsys):
    code = cli.main(
        ["indecs", flip_doc, "--field", "2", "--dim", "1,1,1", "--cap-end", "4096"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "4 classes at dims [1, 1, 1] over 2, 1 indecomposable" in out


def test_ii_indecs_text(tmp_path, capsys):
    q, rot = qf.build_counterexample()
    path = tmp_path / "cx.json"
    path.write_text(qf.json_dumps(qf.quiver_to_dict(q, rot)))
    code = cli.main(["ii-indecs", str(path), "--field", "5", "--dim", "1,1,1,1,1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "1 twist-orbit-sum classes at dims [1, 1, 1, 1, 1]" in out
    assert "period 1: members [[1, 1, 1, 1, 1]]" in out


def test_species_count_text(pair_doc, capsys):
    assert cli.main(["species-count", pair_doc, "--field", "2", "--dim", "1,2"]) == 0
    assert "species count at [1, 2] over 2: 1" in capsys.readouterr().out


def test_verify_kac_passes(tmp_path, capsys):
    path = tmp_path / "a2.json"
    q = qf.validate_quiver(["u", "v"], [("r", "u", "v")])
    path.write_text(qf.json_dumps(qf.quiver_to_dict(q)))
    code = cli.main(["verify", "kac", str(path), "--field", "2", "--max-height", "3"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("PASS")


def test_verify_multisets_choice(tmp_path, capsys):
    path = tmp_path / "a2.json"
    q = qf.validate_quiver(["u", "v"], [("r", "u", "v")])
    path.write_text(qf.json_dumps(qf.quiver_to_dict(q)))
    code = cli.main(
        ["verify", "multisets", str(path), "--field", "2", "--max-height", "3"]
    )
    assert code == 0
    assert "direct-sum multiset crosscheck" in capsys.readouterr().out


def test_verify_failure_exits_one(flip_doc, capsys, monkeypatch):
    broken = TheoremReport(
        title="kac dimension-vector check",
        field_spec="2",
        height=2,
        records=(),
        witnesses=("made-up witness",),
    )
    monkeypatch.setattr(cli, "verify_kac", lambda *a, **k: broken)
    code = cli.main(["verify", "kac", flip_doc, "--field", "2", "--max-height", "2"])
    assert code == 1
    assert "FAIL made-up witness" in capsys.readouterr().out


def test_verify_needs_plain_quiver(pair_doc, capsys):
    code = cli.main(["verify", "kac", pair_doc, "--field", "2", "--max-height", "2"])
    assert code == 2
    assert "plain quiver document" in capsys.readouterr().err


def test_missing_file_exits_two(capsys):
    assert cli.main(["fold", "/nonexistent/nope.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_fixtures_listing_and_documents(capsys):
    assert cli.main(["fixtures"]) == 0
    listed = capsys.readouterr().out.split()
    assert "a3-flip" in listed and "counterexample" in listed
    for name in listed:
        assert cli.main(["fixtures", name]) == 0
        doc = json.loads(capsys.readouterr().out)
        q, a = qf.quiver_from_dict(doc)
        assert a is not None and not a.is_identity
    assert cli.main(["fixtures", "bogus"]) == 2
    assert "unknown fixture" in capsys.readouterr().err


def test_unfold_and_skew_commands(pair_doc, flip_doc, capsys):
    assert cli.main(["unfold", pair_doc]) == 0
    out = capsys.readouterr().out
    assert "automorphism order: 2" in out
    assert cli.main(["skew", flip_doc]) == 0
    out = capsys.readouterr().out
    assert "shift order: 2" in out


def test_stdin_input(monkeypatch, capsys):
    import io

    q, flip = qf.build_a3_flip()
    payload = qf.json_dumps(qf.quiver_to_dict(q, flip))
    monkeypatch.setattr(sys, "stdin", io.StringIO(payload))
    assert cli.main(["fold", "-"]) == 0
    assert "d = [2, 1]" in capsys.readouterr().out


def test_console_script_runs(tmp_path):
    res = subprocess.run(
        ["quiverfold", "fixtures", "a3-flip"], capture_output=True, text=True
    )
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["vertices"] == ["1", "2", "3"]
