import json
import os

import pytest

from ttg import support_model
from ttg.cli import main
from ttg.docio import (DocumentError, ModelInvalidError, dump_document, load,
                       load_document, model_digest, normalize_document)


def model_path(models_dir, name):
    return os.path.join(models_dir, name + ".json")


def test_load_support2_matches_generator(models_dir):
    p, operators, _ = load(model_path(models_dir, "support2"))
    gen = support_model(2)
    assert p.names == gen.names
    assert p.sum == gen.sum
    assert p.action == gen.action
    assert p.triangles == gen.triangles
    assert (p.zero, p.base.unit) == (gen.zero, gen.base.unit)
    assert set(operators) == {"rad", "div_a", "fam_min", "saturate"}


def test_load_without_module_section_defaults_to_self_action(models_dir):
    p, _, _ = load(model_path(models_dir, "chain3"))
    assert p.action == p.base.tensor


def test_unknown_name_in_triangle(models_dir):
    with open(model_path(models_dir, "support2")) as fh:
        doc = json.load(fh)
    doc["category"]["triangles"].append(["a", "mystery", "b"])
    with pytest.raises(DocumentError) as err:
        load_document(doc)
    assert "mystery" in str(err.value)


def test_axiom_violation_is_model_invalid(models_dir):
    with open(model_path(models_dir, "support2")) as fh:
        doc = json.load(fh)
    doc["category"]["sum"][1][0] = "b"  # break a + z = a
    with pytest.raises(ModelInvalidError):
        load_document(doc)


def test_round_trip_normalization(models_dir):
    for name in ("support2", "support3", "chain3"):
        path = model_path(models_dir, name)
        with open(path) as fh:
            doc = json.load(fh)
        p, _, normalized = load(path)
        assert normalized == normalize_document(doc, p)
        # a second pass through dump/parse/normalize is a fixed point
        reparsed = json.loads(dump_document(normalized))
        p2, _, normalized2 = load(path)
        assert normalize_document(reparsed, p2) == normalized


def test_digest_stability(models_dir):
    _, _, doc = load(model_path(models_dir, "support2"))
    assert model_digest(doc) == model_digest(json.loads(dump_document(doc)))


def test_cli_validate_and_exit_codes(models_dir, tmp_path):
    assert main(["validate", "--model", model_path(models_dir, "support2")]) == 0
    assert main(["validate", "--model", str(tmp_path / "missing.json")]) == 2

    broken = tmp_path / "broken.json"
    with open(model_path(models_dir, "support2")) as fh:
        doc = json.load(fh)
    doc["category"]["sum"][1][0] = "b"
    broken.write_text(json.dumps(doc))
    assert main(["validate", "--model", str(broken)]) == 1

    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert main(["validate", "--model", str(garbage)]) == 2


def test_cli_generate(models_dir, capsys):
    assert main(["generate", "--model", model_path(models_dir, "support2"),
                 "--seed", "a,b"]) == 0
    out = capsys.readouterr().out
    assert "t" in out and "stage 1" in out


def test_cli_witness(models_dir, capsys):
    assert main(["witness", "--model", model_path(models_dir, "support2"),
                 "--seed", "a,b", "--target", "t"]) == 0
    assert "a,b" in capsys.readouterr().out


def test_cli_spectral(models_dir):
    assert main(["spectral", "--model", model_path(models_dir, "support2"),
                 "--operator", "identity"]) == 0
    assert main(["spectral", "--model", model_path(models_dir, "chain3"),
                 "--operator", "promote"]) == 0


def test_cli_unknown_operator(models_dir):
    assert main(["spectral", "--model", model_path(models_dir, "support2"),
                 "--operator", "nope"]) == 2


def test_cli_monoid_with_dot(models_dir, tmp_path):
    dot = tmp_path / "monoid.dot"
    assert main(["monoid", "--model", model_path(models_dir, "chain3"),
                 "--operator", "promote", "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("digraph") and "{z}" in text


def test_cli_smod_dot_hasse(models_dir, tmp_path):
    dot = tmp_path / "space.dot"
    assert main(["smod", "--model", model_path(models_dir, "support2"),
                 "--dot", str(dot)]) == 0
    text = dot.read_text()
    # Hasse diagram of the 4-point diamond: 4 cover edges
    assert text.count("->") == 4


def test_cli_report_structured_output(models_dir, tmp_path):
    out = tmp_path / "report.json"
    assert main(["report", "--model", model_path(models_dir, "support2"),
                 "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["passed"] is True
    names = {c["name"] for c in data["checks"]}
    assert "operator:identity" in names and "operator:saturate" in names
