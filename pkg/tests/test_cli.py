import json
import subprocess
import sys

import pytest

from hedonic import corpus
from hedonic.cli import main
from hedonic.gamefile import (
    GameFileError,
    bundled_game,
    bundled_text,
    dump_game,
    game_from_dict,
    game_to_dict,
    load_game,
)
from hedonic.gameclasses import random_game

NAMES = ("example1", "example2", "prop2", "prop3")


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in NAMES:
        path = tmp_path / f"{name}.json"
        assert main(["examples", "--name", name, "--out", str(path)]) == 0
        out[name] = str(path)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# files

@pytest.mark.parametrize("name", NAMES)
def test_bundled_round_trip(name, files):
    assert load_game(files[name]).profile == corpus.profile(name)
    assert bundled_game(name).profile == corpus.profile(name)


def test_examples_idempotent(tmp_path, capsys):
    a = tmp_path / "a.json"
    main(["examples", "--name", "prop3", "--out", str(a)])
    first = a.read_text()
    main(["examples", "--name", "prop3", "--out", str(a)])
    assert a.read_text() == first
    code, out, _ = run(capsys, "examples", "--name", "prop3")
    assert code == 0 and out == first


def test_example_files_reproduce_listings():
    ex1 = json.loads(bundled_text("example1"))
    assert ex1["preferences"]["1"] == [[[1, 2]], [[1, 2, 3]], [[1]], [[1, 3]]]
    ex2 = json.loads(bundled_text("example2"))
    assert ex2["preferences"]["1"] == [[[1, 3]], [[1]], [[1, 2, 3]], [[1, 2]]]
    p3 = json.loads(bundled_text("prop3"))
    assert p3["tail"] == "bottom"
    assert p3["preferences"]["1"][0] == [[1, 2], [1, 3], [1, 4]]


@pytest.mark.parametrize("kind", ["explicit", "ashg", "friends", "enemies", "bhedonic-strict"])
def test_dump_load_round_trip(kind, tmp_path):
    g = random_game(kind, 4, 11)
    path = tmp_path / "g.json"
    path.write_text(dump_game(g))
    back = load_game(path)
    assert back.profile == g.profile
    assert game_to_dict(back) == game_to_dict(g)


BAD = [
    ({"kind": "explicit", "n": 2}, "version"),
    ({"version": 2, "kind": "explicit", "n": 2}, "version"),
    ({"version": 1, "kind": "weird", "n": 2}, "kind"),
    ({"version": 1, "kind": "explicit", "n": 0}, "n"),
    ({"version": 1, "kind": "explicit", "n": 20}, "n"),
    ({"version": 1, "kind": "explicit", "n": 2, "preferences": {"1": [[[2]]], "2": [[[2]], [[1, 2]]]}},
     "preferences.1[0][0]: coalition missing owner 1"),
    ({"version": 1, "kind": "explicit", "n": 2, "preferences": {"1": [[[1]]], "2": [[[2]], [[1, 2]]]}},
     "preferences.1: incomplete"),
    ({"version": 1, "kind": "explicit", "n": 2, "preferences": {"1": [[[2, 1]]]}}, "ascending"),
    ({"version": 1, "kind": "explicit", "n": 2, "preferences": {"3": []}}, "preferences.3"),
    ({"version": 1, "kind": "explicit", "n": 2, "tail": "top", "preferences": {}}, "tail"),
    ({"version": 1, "kind": "ashg", "n": 2, "values": [[0, 1]]}, "values"),
    ({"version": 1, "kind": "ashg", "n": 2, "values": [[0, 1], [1, "x"]]}, "values[1]"),
    ({"version": 1, "kind": "friends", "n": 2, "adjacency": {"1": [1]}}, "adjacency.1"),
    ({"version": 1, "kind": "bhedonic", "n": 2, "rankings": {"1": [2, 2], "2": [1, 2]}}, "rankings.1"),
    ({"version": 1, "kind": "bhedonic", "n": 2, "rankings": {"1": [2, 1]}}, "rankings.2"),
]


@pytest.mark.parametrize("doc,field", BAD)
def test_schema_errors_name_the_field(doc, field):
    with pytest.raises(GameFileError, match=field.replace("[", r"\[").replace("]", r"\]").replace(".", r"\.")):
        game_from_dict(doc)


def test_tail_completion_loads():
    doc = {"version": 1, "kind": "explicit", "n": 2, "tail": "bottom",
           "preferences": {"1": [[[1, 2]]], "2": [[[2]]]}}
    g = game_from_dict(doc).profile
    assert g.tier(1, 0b11) < g.tier(1, 0b01)
    assert g.tier(2, 0b10) < g.tier(2, 0b11)


# commands

def test_check_example1(files, capsys):
    code, out, _ = run(capsys, "check", files["example1"])
    assert code == 0
    lines = {l.split()[0]: l for l in out.splitlines()}
    assert "✓" in lines["TR"] and "✓" in lines["TR-mutual"]
    assert "✗" in lines["BR"]
    assert "n/a" in lines["BR-mutual"]


def test_check_example2_json(files, capsys):
    code, out, _ = run(capsys, "check", "--json", files["example2"])
    assert code == 0
    rec = {r["restriction"]: r for r in json.loads(out)["restrictions"]}
    assert rec["strong-BR"]["holds"] and rec["BR-mutual"]["holds"]
    assert rec["TR-mutual"]["holds"] is None


def test_check_asymmetric_enemies(tmp_path, capsys):
    path = tmp_path / "asym.json"
    path.write_text(json.dumps({"version": 1, "kind": "enemies", "n": 2, "adjacency": {"1": [2], "2": []}}))
    code, out, _ = run(capsys, "check", "--json", str(path))
    rec = {r["restriction"]: r for r in json.loads(out)["restrictions"]}
    assert rec["BR"]["holds"] is True
    assert rec["BR-mutual"]["holds"] is False
    assert rec["BR-mutual"]["witness"]["players"] == [1, 2]


def test_solve(files, capsys):
    code, out, _ = run(capsys, "solve", "--algorithm", "tca", files["example1"])
    assert code == 0 and out.splitlines()[0] == "1,2,3"
    code, out, _ = run(capsys, "solve", "-a", "dynamics-is", files["example2"])
    assert code == 0 and out.splitlines()[0] == "1,3|2"
    assert "step 1:" in out
    code, out, _ = run(capsys, "solve", "-a", "maximal-ir", "--json", files["example2"])
    assert json.loads(out)["partition"] == "1,3|2"


def test_solve_refusal(files, capsys):
    code, out, _ = run(capsys, "solve", "-a", "dynamics-is", files["example1"])
    assert code == 1
    assert out.startswith("refused:") and "bottom responsiveness" in out
    code, out, _ = run(capsys, "solve", "-a", "tca", "--json", files["example2"])
    assert code == 1 and "refused" in json.loads(out)


def test_verify(files, capsys):
    code, out, _ = run(capsys, "verify", "-c", "sns", "-p", "1,2|3,4", files["prop2"])
    assert code == 1
    assert out.strip() == "SNS false H=2,4 → 1,4|2,3"
    code, out, _ = run(capsys, "verify", "-c", "sns", "-p", "1,2|3,4", files["prop3"])
    assert code == 0 and out.strip() == "SNS true"
    code, out, _ = run(capsys, "verify", "-c", "po", "-p", "1,2|3,4", "--json", files["prop3"])
    assert code == 1
    assert json.loads(out)["witness"]["successor"] == "1,4|2,3"


@pytest.mark.parametrize("argv", [
    ["verify", "-c", "sns", "-p", "1,2|3"],
    ["verify", "-c", "sns", "-p", "1,x|3,4"],
    ["verify", "-c", "nope", "-p", "1,2|3,4"],
])
def test_verify_errors(files, capsys, argv):
    code, _, err = run(capsys, *argv, files["prop2"])
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_and_bad_args(tmp_path, capsys):
    assert main(["check", str(tmp_path / "none.json")]) == 2
    assert main(["solve", "-a", "magic", str(tmp_path / "x.json")]) == 2
    assert main([]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "invalid JSON" in err


def test_examples_unknown_name(capsys):
    assert main(["examples", "--name", "nope"]) == 2


def test_survey(files, capsys):
    code, out, _ = run(capsys, "survey", "--json", files["prop2"])
    assert code == 0
    doc = json.loads(out)
    counts = {r["concept"]: r["count"] for r in doc["concepts"]}
    assert counts["SNS"] == 0 and counts["SC"] == 2
    assert doc["hierarchy_violations"] == []
    code, out, _ = run(capsys, "survey", files["example1"])
    assert code == 0
    rows = {l.split()[0]: l.split() for l in out.splitlines()[2:] if l and not l.startswith(("hier", " "))}
    assert rows["PERFECT"][1] == "0" and int(rows["SSNS"][1]) >= 1
    code, out, _ = run(capsys, "survey", "--json", files["example2"])
    assert {r["concept"]: r["count"] for r in json.loads(out)["concepts"]}["SNS"] >= 1


def test_survey_cap(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(dump_game(random_game("enemies", 8, 1)))
    code, _, err = run(capsys, "survey", str(path))
    assert code == 2 and "--max-n-override" in err


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "hedonic", "verify", "-c", "sns", "-p", "1,2|3,4", files["prop3"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "SNS true"
