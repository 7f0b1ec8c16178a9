import json
from pathlib import Path

import pytest

from cli import EXIT_BUDGET, EXIT_INVALID, EXIT_MALFORMED, EXIT_OK, run
from cli.documents import canonicalize, document_from_structure, read_document, serialize_document
from fincat import cyclic_group, symmetric_group

FIXTURES = ["fix-a", "fix-b", "fix-c", "fix-d", "fix-e"]


@pytest.fixture
def xmodkit(config, capsys):
    """Runs the CLI and returns (exit code, stdout, stderr)."""

    def _run(*argv: str):
        code = run(list(argv), config)
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.fixture
def category_file(tmp_path):
    def _write(name: str, category) -> str:
        path = tmp_path / f"{name}.category.json"
        path.write_text(serialize_document(document_from_structure(category)), encoding="utf-8")
        return str(path)

    return _write


@pytest.mark.parametrize("name, kind", [("fix-a", "xmod"), ("fix-c", "xmod"), ("fix-e", "prexmod")])
def test_validate_accepts_fixtures(xmodkit, fixture_file, name, kind):
    code, out, _ = xmodkit("validate", fixture_file(name))
    assert code == EXIT_OK
    assert out.strip() == f"VALID {kind}"


def test_validate_rejects_fix_d(xmodkit, fixture_file):
    code, out, _ = xmodkit("validate", "--format", "json", fixture_file("fix-d"))
    assert code == EXIT_INVALID
    report = json.loads(out)
    assert report["error"] == "QNotInvertible"
    assert report["witness"] == [[0, 1], [2, 1]]


def test_malformed_documents(xmodkit, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert xmodkit("validate", str(broken))[0] == EXIT_MALFORMED

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"kind": "monad"}), encoding="utf-8")
    assert xmodkit("validate", str(unknown))[0] == EXIT_MALFORMED

    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"kind": "xmod"}), encoding="utf-8")
    assert xmodkit("validate", str(missing))[0] == EXIT_MALFORMED

    assert xmodkit("validate", str(tmp_path / "absent.json"))[0] == EXIT_MALFORMED


@pytest.mark.parametrize(
    "edit",
    [
        lambda body: body["action"].append(["g", "h", "1"]),
        lambda body: body["kappa"].update({"g": "h"}),
        lambda body: body["base"]["morphisms"][1].update({"tgt": "**"}),
        lambda body: body["fiber"]["compose"].append(["h", "1", "h"]),
    ],
    ids=["action", "kappa", "object", "compose"],
)
def test_undeclared_names_are_malformed(xmodkit, fixture_file, tmp_path, edit):
    body = json.loads(Path(fixture_file("fix-b")).read_text(encoding="utf-8"))
    edit(body)
    path = tmp_path / "undeclared.json"
    path.write_text(json.dumps(body), encoding="utf-8")
    code, _, err = xmodkit("validate", str(path))
    assert code == EXIT_MALFORMED
    assert "ERROR:" in err


def test_undeclared_name_in_a_composition(xmodkit, fixture_file, tmp_path):
    relcat = tmp_path / "fix-b.relcat.json"
    assert xmodkit("convert", "--to", "relcat", "-o", str(relcat), fixture_file("fix-b"))[0] == EXIT_OK
    body = json.loads(relcat.read_text(encoding="utf-8"))
    body["d"][0][2] = "nowhere"
    relcat.write_text(json.dumps(body), encoding="utf-8")
    assert xmodkit("validate", str(relcat))[0] == EXIT_MALFORMED


def test_convert_to_an_internal_category_and_back(xmodkit, fixture_file, tmp_path):
    relcat = tmp_path / "fix-b.relcat.json"
    code, _, _ = xmodkit("convert", "--to", "relcat", "-o", str(relcat), fixture_file("fix-b"))
    assert code == EXIT_OK
    doc = read_document(relcat)
    assert doc.kind == "relcat"
    assert doc.meta == {"name": "fix-b"}
    assert len(doc.body["d"]) == 8

    code, out, _ = xmodkit("convert", "--to", "xmod", str(relcat))
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "xmod"


def test_forgetful_hops_need_via(xmodkit, fixture_file):
    code, _, err = xmodkit("convert", "--to", "action", fixture_file("fix-a"))
    assert code == EXIT_MALFORMED
    assert "No conversion from xmod to action" in err

    code, out, _ = xmodkit("convert", "--to", "action", "--via", "prexmod", fixture_file("fix-a"))
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "action"

    code, out, _ = xmodkit("convert", "--to", "splitepi", "--via", "prexmod,action", fixture_file("fix-a"))
    assert code == EXIT_OK
    assert len(json.loads(out)["total"]["morphisms"]) == 18


def test_convert_refuses_a_peiffer_failure(xmodkit, fixture_file):
    code, out, _ = xmodkit("convert", "--to", "relcat", "--format", "json", fixture_file("fix-e"))
    assert code == EXIT_INVALID
    assert json.loads(out)["witness"] == [1, 2]

    code, out, _ = xmodkit("convert", "--to", "reflgraph", fixture_file("fix-e"))
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "reflgraph"


@pytest.mark.parametrize("name", ["fix-a", "fix-b", "fix-c", "fix-e"])
def test_roundtrip(xmodkit, fixture_file, name):
    code, out, _ = xmodkit("roundtrip", "--format", "json", fixture_file(name))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["ok"] is True
    assert report["direction"] == "distlaw"


def test_check_reports_witnesses(xmodkit, fixture_file):
    code, out, _ = xmodkit("check", "--property", "peiffer", "--format", "json", fixture_file("fix-e"))
    assert code == EXIT_INVALID
    assert json.loads(out)["witness"] == [1, 2]

    code, out, _ = xmodkit("check", "--property", "q-invertible", "--format", "json", fixture_file("fix-d"))
    assert code == EXIT_INVALID
    assert json.loads(out)["witness"] == [[0, 1], [2, 1]]

    code, out, _ = xmodkit("check", "--property", "peiffer", fixture_file("fix-a"))
    assert code == EXIT_OK
    assert out.startswith("PASS peiffer")


@pytest.mark.parametrize("prop", ["precrossed", "bn", "hn", "qn", "interchange", "d-unique"])
def test_every_check_passes_on_fix_b(xmodkit, fixture_file, prop):
    code, out, _ = xmodkit("check", "--property", prop, fixture_file("fix-b"))
    assert code == EXIT_OK, out


def test_d_search_counts_the_decided_pairs(xmodkit, fixture_file):
    code, out, _ = xmodkit("check", "--property", "d-unique", fixture_file("fix-b"))
    assert code == EXIT_OK
    assert out.strip() == "PASS d-unique: d is unique (checked 8)"


def test_d_search_on_fix_e(xmodkit, fixture_file):
    code, out, _ = xmodkit("check", "--property", "d-unique", "--format", "json", fixture_file("fix-e"))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["solutions"] == 0


def test_check_on_the_wrong_kind(xmodkit, fixture_file):
    assert xmodkit("check", "--property", "peiffer", fixture_file("fix-d"))[0] == EXIT_MALFORMED


def test_qn_on_a_split_epi_checks_q1(xmodkit, fixture_file):
    code, out, _ = xmodkit("check", "--property", "qn", "--format", "json", fixture_file("fix-d"))
    assert code == EXIT_INVALID
    report = json.loads(out)
    assert report["note"] == "q_1 is not bijective"
    assert report["witness"] == [[0, 1], [2, 1]]


def test_enumerate_streams_one_line_per_instance(xmodkit, category_file):
    z2 = category_file("z2", cyclic_group(2))
    code, out, _ = xmodkit("enumerate", "--kind", "xmod", "--base", z2, "--fiber", z2)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[1])["kappa"] == {"1": "1", "g": "g"}


def test_enumerate_budget(xmodkit, category_file, monkeypatch):
    s3 = category_file("s3", symmetric_group(3))
    code, _, err = xmodkit("enumerate", "--kind", "action", "--base", s3, "--fiber", s3, "--budget", "1")
    assert code == EXIT_BUDGET
    assert err.startswith("BUDGET")

    monkeypatch.setenv("XMODKIT_BUDGET", "1")
    assert xmodkit("enumerate", "--kind", "action", "--base", s3, "--fiber", s3)[0] == EXIT_BUDGET


def test_enumerate_needs_category_documents(xmodkit, fixture_file):
    code, _, _ = xmodkit("enumerate", "--kind", "xmod", "--base", fixture_file("fix-b"), "--fiber", fixture_file("fix-b"))
    assert code == EXIT_MALFORMED


def test_sweep_one_pair(xmodkit, category_file):
    z2 = category_file("z2", cyclic_group(2))
    z3 = category_file("z3", cyclic_group(3))
    code, out, _ = xmodkit("sweep", "--format", "json", "--base", z2, "--fiber", z3)
    assert code == EXIT_OK
    outcome = json.loads(out)
    assert (outcome["instances"], outcome["peiffer"], outcome["composed"]) == (2, 2, 2)


def test_sweep_catalogue(xmodkit):
    code, out, _ = xmodkit("sweep", "--format", "json", "--max-order", "2")
    assert code == EXIT_OK
    outcomes = [json.loads(line) for line in out.strip().splitlines()]
    assert len(outcomes) == 9
    assert all(outcome["ok"] for outcome in outcomes)


def test_sweep_needs_both_sides(xmodkit, category_file):
    z2 = category_file("z2", cyclic_group(2))
    assert xmodkit("sweep", "--base", z2)[0] == EXIT_MALFORMED


def test_fixtures_are_regenerated_byte_for_byte(xmodkit, config, tmp_path):
    code, out, _ = xmodkit("fixtures", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == len(FIXTURES)
    for shipped in sorted(Path(config.FIXTURE_DIR).glob("*.json")):
        assert (tmp_path / shipped.name).read_bytes() == shipped.read_bytes(), shipped.name


def test_fixtures_listing(xmodkit):
    code, out, _ = xmodkit("fixtures")
    assert code == EXIT_OK
    assert [Path(line).name for line in out.strip().splitlines()] == [
        "fix-a.xmod.json",
        "fix-b.xmod.json",
        "fix-c.xmod.json",
        "fix-d.splitepi.json",
        "fix-e.prexmod.json",
    ]


@pytest.mark.parametrize("name", FIXTURES)
def test_shipped_documents_are_canonical(fixture_file, name):
    text = Path(fixture_file(name)).read_text(encoding="utf-8")
    assert canonicalize(text, strict=name != "fix-d") == text


def test_version_and_usage(xmodkit):
    code, out, _ = xmodkit("--version")
    assert code == EXIT_OK
    assert out.startswith("xmodkit ")
    assert xmodkit()[0] == EXIT_MALFORMED
    assert xmodkit("frobnicate")[0] == EXIT_MALFORMED
