import json

import pytest

from qwind.cli import parse_family_spec, run
from qwind.complexes import Face, FaceFamily
from qwind.drawings import ParseError


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def alt4_file(tmp_path, capsys):
    code, out, _ = invoke(capsys, "generate", "alternating", "--n", "4")
    assert code == 0
    path = tmp_path / "alt4.json"
    path.write_text(out)
    return str(path)


class TestGenerateAndCheck:
    def test_generate_parses(self, capsys):
        code, out, err = invoke(capsys, "generate", "alternating", "--n", "5")
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 5
        assert "alternating" in err

    def test_gp_check_ok(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "gp-check", alt4_file)
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_gp_check_violations_exit_1(self, tmp_path, capsys):
        bad = {
            "n": 3,
            "edges": [[0, 1]],
            "positions": {"0": ["0", "0"], "1": ["2", "0"], "2": ["1", "0"]},
            "bends": {},
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, out, _ = invoke(capsys, "gp-check", str(path))
        assert code == 1
        report = json.loads(out)
        assert report["ok"] is False
        assert report["violations"][0]["kind"] == "vertex-on-disjoint-edge"

    def test_enumerate_winding(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "2")
        assert code == 0
        assert json.loads(out)["count"] == 1

    def test_byte_identical_reruns(self, alt4_file, capsys):
        _, out1, _ = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "2")
        _, out2, _ = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "2")
        assert out1 == out2

    def test_jobs_flag_leaves_output_identical(self, alt4_file, capsys):
        _, out1, _ = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "2")
        _, out2, _ = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "2", "--jobs", "2")
        assert out1 == out2

    def test_check_family(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "check", alt4_file, "--family", "2;0,1,3")
        assert code == 0
        assert json.loads(out)["certified"] is True

    def test_check_family_not_winding_exit_1(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "check", alt4_file, "--family", "0;1,2,3")
        assert code == 1
        assert json.loads(out)["certified"] is False

    def test_family_spec_parser(self):
        fam = parse_family_spec("4;0,1,6;2,3,5")
        assert fam == FaceFamily.of([Face.of(4), Face.of(0, 1, 6), Face.of(2, 3, 5)])
        with pytest.raises(ParseError):
            parse_family_spec("4;;1,2")
        with pytest.raises(ParseError):
            parse_family_spec("1;1,2")


class TestOtherCommands:
    def test_bounds(self, capsys):
        code, out, _ = invoke(capsys, "bounds", "--d", "2", "--q", "3")
        assert code == 0
        obj = json.loads(out)
        assert obj["sierksma"] == 4 and obj["hell_bound"] == "27/16"

    def test_sierksma_and_tverberg(self, tmp_path, capsys):
        code, out, _ = invoke(capsys, "generate", "sierksma", "--d", "2", "--q", "2")
        assert code == 0
        path = tmp_path / "cfg.json"
        path.write_text(out)
        code, out, _ = invoke(capsys, "enumerate", "tverberg", str(path), "--q", "2")
        assert code == 0
        assert json.loads(out)["count"] == 1

    def test_perturb_round_trip(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "perturb", alt4_file, "--seed", "3", "--mag", "1/32")
        assert code == 0
        assert json.loads(out)["n"] == 4

    def test_qwinding(self, alt4_file, capsys):
        code, out, _ = invoke(capsys, "qwinding", alt4_file, "--q", "2", "--max-len", "3")
        assert code == 0
        assert json.loads(out)["found"] is True

    def test_outerplanar(self, tmp_path, capsys):
        path = tmp_path / "c5.json"
        path.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}))
        code, out, _ = invoke(capsys, "outerplanar", str(path))
        assert code == 0
        assert json.loads(out)["outerplanar"] is True

    def test_hunt_deterministic(self, capsys):
        args = ("hunt", "--graph", "K4", "--q", "2", "--seed", "5", "--budget", "6")
        code, out1, _ = invoke(capsys, *args)
        assert code == 0
        _, out2, _ = invoke(capsys, *args)
        assert out1 == out2
        assert json.loads(out1)["best_count"] >= 1


class TestErrorPaths:
    def test_missing_file_is_exit_3(self, capsys):
        code, _, err = invoke(capsys, "gp-check", "/nonexistent/x.json")
        assert code == 3
        assert "cannot read" in err

    def test_garbage_file_is_exit_3(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("{{{")
        code, _, _ = invoke(capsys, "gp-check", str(path))
        assert code == 3

    def test_semantic_mismatch_is_exit_3(self, alt4_file, capsys):
        code, _, err = invoke(capsys, "enumerate", "winding", alt4_file, "--q", "3")
        assert code == 3
        assert "complete graph" in err

    def test_usage_error_is_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            run(["enumerate", "winding"])  # missing file and --q
        assert exc.value.code == 2

    def test_unknown_preset_is_exit_2(self, capsys):
        code, _, _ = invoke(capsys, "hunt", "--graph", "nope", "--q", "2", "--seed", "1", "--budget", "1")
        assert code == 2
