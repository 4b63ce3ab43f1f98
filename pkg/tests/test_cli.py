import json
import re

import pytest

from app import Settings, main, path_outputs
from conftest import pdb_line
from utils.constants import EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_USAGE
from utils.errors import ParseError, UsageError
from utils.serialization import write_atomic


def write_diagram(path, pairs, dim=1):
    path.write_text(json.dumps({"dim": dim, "max_eps": None, "dropped_infinite": 0,
                                "pairs": [list(p) for p in pairs]}))
    return path


def test_persist_unit_square(unit_square_csv, tmp_path):
    out = tmp_path / "square.json"
    code = main(["persist", "--input", str(unit_square_csv), "--dim", "1", "--max-eps", "2",
                 "--output", str(out)])
    assert code == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["pairs"] == [[1.0, 1.4142135623730951]]
    assert payload["dim"] == 1
    assert payload["max_eps"] == 2.0
    assert payload["provenance"]["n_points"] == 4


def test_persist_h0(tmp_path):
    cloud = tmp_path / "three.csv"
    cloud.write_text("0,0,0\n1,0,0\n3,0,0\n")
    out = tmp_path / "h0.json"
    assert main(["persist", "--input", str(cloud), "--dim", "0", "--output", str(out)]) == EXIT_OK
    pairs = json.loads(out.read_text())["pairs"]
    assert pairs == [[0.0, 1.0], [0.0, 2.0]]


def test_persist_pdb_chain(tmp_path):
    pdb = tmp_path / "model.pdb"
    pdb.write_text("\n".join([
        pdb_line(1, "CA", 0, 0, 0, chain="A"),
        pdb_line(2, "CA", 0, 1, 0, chain="A"),
        pdb_line(3, "CA", 1, 1, 0, chain="A"),
        pdb_line(4, "CA", 1, 0, 0, chain="A"),
        pdb_line(5, "CA", 9, 9, 9, chain="B"),
    ]) + "\n")
    out = tmp_path / "a.json"
    code = main(["persist", "--input", str(pdb), "--select", "chain:A", "--dim", "1",
                 "--max-eps", "2", "--output", str(out)])
    assert code == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["pairs"] == [[1.0, 1.4142135623730951]]
    assert payload["provenance"]["selection"] == "chain:A"


def test_persist_is_byte_identical(unit_square_csv, tmp_path):
    outputs = []
    for name in ("one.json", "two.json"):
        out = tmp_path / name
        main(["persist", "--input", str(unit_square_csv), "--dim", "1", "--output", str(out)])
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_persist_duplicates_need_jitter(tmp_path):
    cloud = tmp_path / "dup.csv"
    cloud.write_text("0,0,0\n1,0,0\n0,0,0\n0,1,0\n")
    out = tmp_path / "d.json"
    assert main(["persist", "--input", str(cloud), "--dim", "1", "--output", str(out)]) == EXIT_PARSE
    assert not out.exists()
    assert main(["persist", "--input", str(cloud), "--dim", "1", "--jitter", "0.001",
                 "--seed", "4", "--output", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["provenance"]["jitter"] == {"sigma": 0.001, "seed": 4}


@pytest.mark.parametrize("argv,code", [
    (["persist", "--input", "missing.csv", "--dim", "1", "--output", "x.json"], EXIT_USAGE),
    (["persist", "--dim", "1", "--output", "x.json"], EXIT_USAGE),
    (["persist", "--input", "a.csv", "--dim", "2", "--output", "x.json"], EXIT_USAGE),
    (["frobnicate"], EXIT_USAGE),
    ([], EXIT_USAGE),
])
def test_usage_errors(argv, code, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == code
    assert "error" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    cloud = tmp_path / "bad.csv"
    cloud.write_text("0,0,0\nnot,a,point\n")
    assert main(["persist", "--input", str(cloud), "--dim", "1",
                 "--output", str(tmp_path / "x.json")]) == EXIT_PARSE
    assert "line 2" in capsys.readouterr().err


def test_simplex_budget_exit_code(tmp_path, monkeypatch):
    cloud = tmp_path / "cloud.csv"
    cloud.write_text("0,0,0\n1,0,0\n0,1,0\n0,0,1\n1,1,1\n2,0,1\n")
    monkeypatch.setenv("LATPATH_SIMPLEX_BUDGET", "1")
    out = tmp_path / "x.json"
    code = main(["persist", "--input", str(cloud), "--dim", "1", "--max-eps", "10",
                 "--output", str(out)])
    assert code == EXIT_RESOURCE
    assert not out.exists()


def test_path_single_pair(tmp_path):
    diagram = write_diagram(tmp_path / "one.json", [(1.0, 2.0)])
    prefix = tmp_path / "out" / "one"
    assert main(["path", "--diagram", str(diagram), "--output-prefix", str(prefix)]) == EXIT_OK
    outputs = path_outputs(prefix)
    with open(outputs["path"]) as f:
        assert f.read() == "q=1\nR\nU\n"
    with open(outputs["step"]) as f:
        assert f.read().splitlines() == ["t,phi", "0.0,1"]


def test_path_nested_diagram_with_svg(tmp_path):
    diagram = write_diagram(tmp_path / "nested.json", [(1, 8), (2, 7), (3, 6.5), (4, 5)])
    prefix = tmp_path / "nested"
    code = main(["path", "--diagram", str(diagram), "--output-prefix", str(prefix), "--svg"])
    assert code == EXIT_OK
    outputs = path_outputs(prefix)
    with open(outputs["path"]) as f:
        assert f.read().split() == ["q=4", "R", "R", "R", "R", "U", "U", "U", "U"]
    with open(outputs["encoding"]) as f:
        encoding = json.load(f)
    assert encoding["steps"] == "RRRRUUUU"
    assert encoding["births"] == [1.0, 2.0, 3.0, 4.0]
    with open(outputs["svg"]) as f:
        d = re.search(r'class="staircase" d="([^"]+)"', f.read()).group(1)
    corners = [tuple(map(float, c.split(","))) for c in re.findall(r"[-\d.]+,[-\d.]+", d)]
    assert all(a[0] <= b[0] and a[1] >= b[1] for a, b in zip(corners, corners[1:]))


def test_path_h0_diagram_is_augmented(tmp_path):
    diagram = write_diagram(tmp_path / "h0.json", [(0, 1.0), (0, 2.0), (0, 2.5)], dim=0)
    prefix = tmp_path / "h0"
    assert main(["path", "--diagram", str(diagram), "--output-prefix", str(prefix)]) == EXIT_OK
    with open(path_outputs(prefix)["encoding"]) as f:
        encoding = json.load(f)
    assert encoding["augment_delta"] == pytest.approx(1e-3)
    assert encoding["steps"] == "RRRUUU"


def test_path_empty_diagram(tmp_path, capsys):
    diagram = write_diagram(tmp_path / "empty.json", [])
    code = main(["path", "--diagram", str(diagram), "--output-prefix", str(tmp_path / "e")])
    assert code == EXIT_PARSE
    assert "no finite pairs" in capsys.readouterr().err


@pytest.mark.parametrize("text", [
    '{"dim": 1, "max_eps": NaN, "dropped_infinite": 0, "pairs": [[0.5, 1.0]]}',
    '{"dim": 1, "max_eps": null, "dropped_infinite": 0, "pairs": [[0.5, 1.0], [0.7, Infinity]]}',
])
def test_path_rejects_non_finite_diagram(tmp_path, capsys, text):
    diagram = tmp_path / "bad.json"
    diagram.write_text(text)
    code = main(["path", "--diagram", str(diagram), "--output-prefix", str(tmp_path / "bad")])
    assert code == EXIT_PARSE
    assert "finite" in capsys.readouterr().err


def test_compare_with_itself(tmp_path, capsys):
    diagram = write_diagram(tmp_path / "a.json", [(1.0, 4.0), (2.0, 3.0), (2.5, 6.0)])
    out = tmp_path / "r.json"
    code = main(["compare", "--a", str(diagram), "--b", str(diagram), "--output", str(out)])
    assert code == EXIT_OK
    result = json.loads(out.read_text())
    assert result["d_stat"] == 0.0
    assert result["p_exact"] == 1.0
    assert result["p_permutation"] is None
    assert "topological distance D = 0.0000" in capsys.readouterr().out


def test_compare_all_methods(tmp_path):
    a = write_diagram(tmp_path / "a.json", [(0.1, 1.0), (0.3, 2.0), (0.5, 2.2), (1.5, 3.0)])
    b = write_diagram(tmp_path / "b.json", [(0.2, 4.0), (0.4, 5.0), (2.5, 6.5)])
    outputs = []
    for name in ("r1.json", "r2.json"):
        out = tmp_path / name
        code = main(["compare", "--a", str(a), "--b", str(b), "--method",
                     "exact,asymptotic,permutation", "--n-perm", "500", "--seed", "3",
                     "--sequence", "deaths", "--output", str(out)])
        assert code == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    result = json.loads(outputs[0])
    assert result["p_permutation"]["n_perm"] == 500
    assert result["provenance"]["methods"] == ["exact", "asymptotic", "permutation"]


def test_compare_bad_method(tmp_path):
    a = write_diagram(tmp_path / "a.json", [(1.0, 2.0)])
    code = main(["compare", "--a", str(a), "--b", str(a), "--method", "bootstrap",
                 "--output", str(tmp_path / "r.json")])
    assert code == EXIT_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "latpath" in capsys.readouterr().out


def test_settings_round_trip(tmp_path):
    settings = Settings()
    settings.n_perm = 123
    settings.series = "literal"
    path = tmp_path / "settings.json"
    settings.save_settings(path)
    loaded = Settings()
    loaded.load_settings(path)
    assert loaded.to_dict() == settings.to_dict()


def test_settings_missing_file_keeps_defaults(tmp_path):
    settings = Settings()
    settings.load_settings(tmp_path / "absent.json")
    assert settings.to_dict() == Settings().to_dict()


def test_settings_environment():
    settings = Settings()
    settings.apply_environment({"LATPATH_SIMPLEX_BUDGET": "500", "LATPATH_LOG_LEVEL": "debug"})
    assert settings.simplex_budget == 500
    assert settings.log_level == "DEBUG"
    with pytest.raises(UsageError):
        settings.apply_environment({"LATPATH_SIMPLEX_BUDGET": "lots"})


def test_settings_file_feeds_compare_defaults(tmp_path):
    settings_path = tmp_path / "s.json"
    settings_path.write_text(json.dumps({"methods": "asymptotic"}))
    a = write_diagram(tmp_path / "a.json", [(1.0, 2.0), (1.5, 3.0)])
    out = tmp_path / "r.json"
    code = main(["--settings", str(settings_path), "compare", "--a", str(a), "--b", str(a),
                 "--output", str(out)])
    assert code == EXIT_OK
    result = json.loads(out.read_text())
    assert result["p_exact"] is None
    assert result["p_asymptotic"] == 1.0


@pytest.mark.parametrize("payload", [{"n_perm": "many"}, {"simplex_budget": [1]}, {"seed": None}])
def test_settings_rejects_non_integer_values(tmp_path, payload):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(ParseError, match="s.json"):
        Settings().load_settings(path)


def test_bad_settings_file_exit_code(tmp_path, capsys):
    settings_path = tmp_path / "s.json"
    settings_path.write_text(json.dumps({"n_perm": "many"}))
    a = write_diagram(tmp_path / "a.json", [(1.0, 2.0)])
    code = main(["--settings", str(settings_path), "compare", "--a", str(a), "--b", str(a),
                 "--output", str(tmp_path / "r.json")])
    assert code == EXIT_PARSE
    assert "integer setting" in capsys.readouterr().err


def test_write_atomic_unwritable_destination(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    with pytest.raises(UsageError, match="Cannot write"):
        write_atomic(blocker / "out.json", "{}\n")
    target = tmp_path / "taken"
    target.mkdir()
    with pytest.raises(UsageError, match="Cannot write"):
        write_atomic(target, "{}\n")
    assert list(target.iterdir()) == []
    assert sorted(p.name for p in tmp_path.iterdir()) == ["blocker", "taken"]


def test_unwritable_output_exit_code(unit_square_csv, tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code = main(["persist", "--input", str(unit_square_csv), "--dim", "1",
                 "--output", str(blocker / "square.json")])
    assert code == EXIT_USAGE
    assert "Cannot write" in capsys.readouterr().err
