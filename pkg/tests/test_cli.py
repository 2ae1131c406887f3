import json
import subprocess
import sys

import jsonschema
import pytest

from sylvkit.cli import SCHEMAS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_canon(capsys):
    assert run(capsys, "canon", "-m", "sylv", "211") == (0, "121\n", "")
    assert run(capsys, "canon", "-m", "sylvh", "221")[1] == "212\n"
    assert run(capsys, "canon", "-m", "sylv", "")[1] == "ε\n"


@pytest.mark.parametrize("tag", ["sylv", "sylvh", "baxt"])
@pytest.mark.parametrize("word", ["5411245765", "2313", "3,12,1,12", "1"])
def test_canon_output_is_a_fixed_point(capsys, tag, word):
    _, once, _ = run(capsys, "canon", "-m", tag, word)
    _, twice, _ = run(capsys, "canon", "-m", tag, once.strip())
    assert once == twice


def test_check_id(capsys):
    assert run(capsys, "check-id", "-m", "baxt", "yxxyxy = yxyxxy") == (0, "SAT\n", "")
    code, out, _ = run(capsys, "check-id", "-m", "sylv", "xy = yx")
    assert code == 1 and out.startswith("UNSAT (witness: o_{")


def test_prec(capsys):
    code, out, _ = run(capsys, "prec", "--side", "right", "2313")
    assert code == 0
    assert out == "3-1 right precedence, index 1\n3-2 right precedence, index 2\n"
    assert run(capsys, "prec", "--side", "left", "3121")[1] == "1-2 left precedence, index 1\n"


def test_equal(capsys):
    assert run(capsys, "equal", "-m", "sylv", "211", "121")[:2] == (0, "equal\n")
    code, out, _ = run(capsys, "equal", "-m", "sylv", "2313", "2133")
    assert code == 1 and out.startswith("not equal")


def test_parse_errors_exit_2(capsys):
    for argv in (
        ["canon", "-m", "sylv", "2x1"],
        ["check-id", "-m", "sylv", "xy yx"],
        ["equal", "-m", "sylv", "0", "1"],
        ["embed", "-m", "sylv", "--rank", "2", "123"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == "" and err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["canon", "-m", "plactic", "12"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_tree(capsys):
    code, out, _ = run(capsys, "tree", "-m", "sylv", "2313")
    assert code == 0 and "3" in out
    code, out, _ = run(capsys, "tree", "-m", "sylv", "2313", "--format", "dot")
    assert out.startswith("digraph T {")
    code, out, _ = run(capsys, "tree", "-m", "baxt", "21")
    assert "left-strict:" in out and "right-strict:" in out


def test_refute(capsys):
    code, out, _ = run(capsys, "refute", "-m", "sylv", "xzxytx = xzyxtx")
    assert code == 0 and out == "{t↦ε, x↦2, y↦1, z↦ε}\n"
    assert run(capsys, "refute", "-m", "sylv", "xyxy = yxxy")[1] == "no refuting assignment found\n"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "-m", "sylv", "--vars", "2", "--max-len", "6")
    assert code == 0
    assert out.splitlines() == ["sylv: shortest identities with 2 variables have length 4 (1 up to equivalence)", "xyxy = yxxy"]


def test_search_guard(capsys, monkeypatch):
    monkeypatch.setenv("SYLVKIT_MAX_CANDIDATES", "10")
    code, out, err = run(capsys, "search", "-m", "sylv", "--vars", "2", "--max-len", "6")
    assert code == 3 and out == "" and "SYLVKIT_MAX_CANDIDATES" in err


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", "-m", "sylv", "xyxy = yxxy")
    assert code == 0
    assert out.splitlines() == ["xyxy", "[L] [forward] ctxL='' σ={x→x, y→y, z→ε, t→ε} ctxR='' ⇒ yxxy"]
    code, out, _ = run(capsys, "derive", "-m", "sylvh", "xyxy = yxxy")
    assert code == 1 and "not satisfied" in out
    code, _, err = run(capsys, "derive", "-m", "baxt", "xyxyxy = xyyxxy", "--budget", "0")
    assert code == 3 and err


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "-m", "sylv", "--rank", "3", "3123")
    assert code == 0
    assert out.splitlines()[1] == "(1,3): 12212"


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify", "relations")
    assert code == 0 and out.startswith("PASS defining relations")


def test_verify_embedding_small(capsys):
    code, out, _ = run(capsys, "verify", "embedding", "--rank", "2", "--max-len", "3")
    assert code == 0 and out.startswith("PASS")


JSON_CASES = [
    ("canon", ["canon", "-m", "baxt", "--json", "2131"]),
    ("canon", ["canon", "-m", "sylv", "--json", "2131"]),
    ("prec", ["prec", "--side", "left", "--json", "1312"]),
    ("equal", ["equal", "-m", "sylv", "--json", "211", "121"]),
    ("check-id", ["check-id", "-m", "sylv", "--json", "xy = yx"]),
    ("check-id", ["check-id", "-m", "baxt", "--json", "yxxyxy = yxyxxy"]),
    ("refute", ["refute", "-m", "sylv", "--json", "xy = yx"]),
    ("refute", ["refute", "-m", "sylv", "--json", "xyxy = yxxy"]),
    ("search", ["search", "-m", "baxt", "--vars", "2", "--max-len", "6", "--json"]),
    ("derive", ["derive", "-m", "baxt", "--json", "xyxyxy = xyyxxy"]),
    ("derive", ["derive", "-m", "sylv", "--json", "xy = yx"]),
    ("embed", ["embed", "-m", "baxt", "--rank", "3", "--json", "3123"]),
    ("verify", ["verify", "relations", "--json"]),
]


@pytest.mark.parametrize("schema,argv", JSON_CASES)
def test_json_output_validates(capsys, schema, argv):
    _, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[schema])


def test_schemas_are_valid():
    for schema in SCHEMAS.values():
        jsonschema.Draft202012Validator.check_schema(schema)


def test_output_is_deterministic(capsys):
    argv = ["derive", "-m", "baxt", "xzytxyrxsy = xzytyxrxsy"]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sylvkit", "canon", "-m", "sylv", "211"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "121\n"
