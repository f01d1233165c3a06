import json

import pytest

from src.cli.main import build_parser, main


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def doc(data_dir, name):
    return str(data_dir / name)


class TestVerdicts:
    def test_noncommuting_field_fails_with_witness(self, capsys, data_dir):
        code, report = run_json(capsys, "commute-check", doc(data_dir, "noncommuting.dd"))
        assert code == 1
        assert report["verdict"] == "fail"
        failed = [f for f in report["findings"] if not f["ok"]]
        assert [f["where"] for f in failed] == ["y"]
        assert failed[0]["witness"]["delta_sigma"] == "t"
        assert failed[0]["check"] == "commutation"

    def test_noncommuting_kernel_fails(self, capsys, data_dir):
        code, report = run_json(capsys, "verify-dd", doc(data_dir, "noncommuting_kernel.dd"))
        assert code == 1
        assert any(f["where"] == "(1,1,1)" for f in report["findings"] if not f["ok"])

    @pytest.mark.parametrize("name, bound", [
        ("difference_equality.dd", "met-with-equality"),
        ("difference_inseparable.dd", "violated"),
    ])
    def test_classify_diff(self, capsys, data_dir, name, bound):
        code, report = run_json(capsys, "classify-diff", doc(data_dir, name))
        assert code == 0
        assert report["summary"]["bound"] == bound

    @pytest.mark.parametrize("argv", [
        ["verify-kernel", "riccati.dk"],
        ["classify", "riccati.dk"],
        ["classify", "riccati.dd"],
        ["verify-dd", "riccati.dd"],
        ["check-hypotheses", "riccati.dd"],
        ["linearize", "riccati.dd"],
        ["dd-prolong", "riccati.dd", "--steps", "1", "--M", "1"],
        ["realize", "riccati.dd", "--target", "8,3"],
        ["realize", "free_slot.dd", "--target", "1,2", "--lenient"],
        ["adjoin-preimage", "preimage.dd"],
        ["perfect-extend", "perfect.dd"],
        ["perfect-extend", "perfect_chain.dd"],
        ["r-map", "perfect_chain.dd", "--element", "c"],
    ])
    def test_passing_commands(self, capsys, data_dir, argv):
        command, name, *rest = argv
        code, report = run_json(capsys, command, doc(data_dir, name), *rest)
        assert code == 0, report["findings"]
        assert report["verdict"] == "pass"

    def test_prolong(self, capsys, data_dir):
        code, report = run_json(capsys, "prolong", doc(data_dir, "riccati.dk"), "--steps", "3")
        assert code == 0
        assert report["summary"]["r_after"] == "4"
        assert len(report["tables"]["entries"]) == 5

    def test_engine_refusal_is_a_failing_finding(self, capsys, data_dir):
        code, report = run_json(capsys, "dd-prolong", doc(data_dir, "riccati.dd"), "--steps", "1", "--M", "3")
        assert code == 1
        assert report["findings"][-1]["check"] == "HypothesisViolation"

    def test_bundled_name_resolves(self, capsys):
        code, report = run_json(capsys, "verify-kernel", "riccati.dk")
        assert code == 0


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, report = run_json(capsys, "verify-kernel", str(tmp_path / "absent.dk"))
        assert code == 2
        assert report["verdict"] == "error"

    def test_syntax_error(self, capsys, tmp_path):
        path = tmp_path / "broken.dk"
        path.write_text("field Q(t);\ngen a alg a^2 -", encoding="utf-8")
        code, report = run_json(capsys, "verify-kernel", str(path))
        assert code == 2
        assert report["findings"][0]["witness"]["error"] == "DSLSyntaxError"

    def test_missing_block(self, capsys, data_dir):
        code, _ = run_json(capsys, "verify-kernel", doc(data_dir, "noncommuting.dd"))
        assert code == 2

    @pytest.mark.parametrize("argv", [
        [],
        ["no-such-command"],
        ["prolong", "riccati.dk"],
        ["realize", "riccati.dd", "--target", "8"],
        ["prolong", "riccati.dk", "--steps", "-1"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2
        capsys.readouterr()


class TestOutput:
    def test_text_rendering(self, capsys, data_dir):
        assert main(["commute-check", doc(data_dir, "noncommuting.dd")]) == 1
        out = capsys.readouterr().out
        assert out.startswith("commute-check: FAIL")
        assert "witness for commutation at y" in out

    def test_timing(self, capsys, data_dir):
        code, report = run_json(capsys, "verify-kernel", doc(data_dir, "riccati.dk"), "--timing")
        assert code == 0
        assert report["timing_ms"] is not None

    def test_examples_suite(self, capsys):
        code, report = run_json(capsys, "examples")
        assert code == 0, [f for f in report["findings"] if not f["ok"]]
        names = [f["check"] for f in report["findings"]]
        assert len(names) == len(set(names))
        again = run_json(capsys, "examples")[1]
        assert [f["detail"] for f in again["findings"]] == [f["detail"] for f in report["findings"]]

    def test_parser_lists_every_command(self):
        parser = build_parser()
        subparsers = next(a for a in parser._actions if a.dest == "command")
        assert set(subparsers.choices) >= {
            "verify-kernel", "verify-dd", "classify", "classify-diff", "prolong", "dd-prolong",
            "linearize", "check-hypotheses", "realize", "commute-check", "adjoin-preimage",
            "perfect-extend", "r-map", "examples",
        }
