"""End-to-end tests of the command line interface."""

import csv
import io
import json
from fractions import Fraction

import pytest

import kostantcenter.goldens as goldens
from kostantcenter.center import CenterPresentation, center_ideal_rank1
from kostantcenter.cli import main
from kostantcenter.mpoly import MPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCenterCommand:
    def test_k5_text_is_factored_sextic(self, capsys):
        code, out, _ = run(capsys, "center", "--algebra", "A1", "--mu", "5")
        assert code == 0
        assert "C2^2 - 2*C2*Mtilde1 + Mtilde1^2 - 50*C2 - 50*Mtilde1 + 525" in out
        assert out.count("(") == 3

    def test_k0_diagonal(self, capsys):
        code, out, _ = run(capsys, "center", "--algebra", "A1", "--mu", "0")
        assert code == 0
        assert out.strip() == "(C2 - Mtilde1)"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(
            capsys, "center", "--algebra", "A1", "--mu", "5", "--format", "json"
        )
        assert code == 0
        pres = CenterPresentation.from_jsonable(json.loads(out))
        assert pres.factor_keys() == center_ideal_rank1(5).factor_keys()
        assert pres.level == 5

    def test_graded_alias(self, capsys):
        code, out, _ = run(capsys, "graded", "--mu", "5")
        assert code == 0
        assert "M1^2 - 100*c2" in out
        assert "M1^2 - 36*c2" in out
        assert "M1^2 - 4*c2" in out

    def test_components_a2(self, capsys):
        code, out, _ = run(
            capsys,
            "center", "--algebra", "A2", "--mu", "1,1", "--coords", "components",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["fiber_dimension"] == 10
        assert len(data["components"]) == 2

    def test_higher_rank_closed_form_rejected(self, capsys):
        code, _, err = run(capsys, "center", "--algebra", "A2", "--mu", "1,1")
        assert code == 2
        assert "rank one" in err

    def test_bad_weight_arity(self, capsys):
        code, _, err = run(capsys, "center", "--algebra", "A2", "--mu", "5")
        assert code == 2

    def test_bad_algebra(self, capsys):
        code, _, err = run(capsys, "center", "--algebra", "Q3", "--mu", "5")
        assert code == 2

    def test_enumeration_bound_exit_code(self, capsys):
        code, _, err = run(
            capsys,
            "center", "--algebra", "A2", "--mu", "99,99", "--coords", "components",
        )
        assert code == 3
        assert "bound" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "center.json"
        code, out, _ = run(
            capsys,
            "center", "--algebra", "A1", "--mu", "5", "--format", "json",
            "--out", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["coords"] == "tilde"


class TestTensorCommand:
    def test_projective_decomposition(self, capsys):
        code, out, _ = run(
            capsys, "tensor", "--algebra", "A1", "--lambda", "-1", "--mu", "5"
        )
        assert code == 0
        assert out.splitlines()[0] == "P-6 (+) P-4 (+) P-2"
        assert "characters: 24, 8, 0" in out

    def test_generic_integral_all_vermas(self, capsys):
        code, out, _ = run(
            capsys, "tensor", "--algebra", "A1", "--lambda", "7", "--mu", "5"
        )
        assert code == 0
        blocks = out.splitlines()[0].split(" (+) ")
        assert len(blocks) == 6
        assert all(b.startswith("M") for b in blocks)

    def test_trivial(self, capsys):
        code, out, _ = run(
            capsys, "tensor", "--algebra", "A1", "--lambda", "0", "--mu", "0"
        )
        assert code == 0
        assert out.splitlines()[0] == "M0"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "tensor", "--algebra", "A1", "--lambda", "0", "--mu", "5",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert [b["label"] for b in data["blocks"]] == ["P:-5", "P:-3", "M:-1", "M:5"]

    def test_rational_lambda_character_blocks(self, capsys):
        code, out, _ = run(
            capsys, "tensor", "--algebra", "A1", "--lambda", "1/3", "--mu", "5"
        )
        assert code == 0
        assert out.count("multiplicity 1") == 6

    def test_a2_character_blocks(self, capsys):
        code, out, _ = run(
            capsys,
            "tensor", "--algebra", "A2", "--lambda", "1/2,1/3", "--mu", "1,1",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert sum(b["mult"] for b in data["blocks"]) == 8


class TestVerifyCommand:
    def test_paper_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["failed"] == 0
        assert data["passed"] >= 12

    def test_properties_deterministic(self, capsys):
        code1, out1, _ = run(
            capsys, "verify", "--suite", "properties", "--seed", "42", "--format", "json"
        )
        code2, out2, _ = run(
            capsys, "verify", "--suite", "properties", "--seed", "42", "--format", "json"
        )
        assert code1 == code2 == 0
        assert out1 == out2

    def test_mutated_golden_fails(self, capsys, monkeypatch):
        corrupted = dict(goldens.TILDE_FACTORS_K5)
        corrupted[5] = dict(corrupted[5])
        corrupted[5][(0, 0)] = 526
        monkeypatch.setattr(goldens, "TILDE_FACTORS_K5", corrupted)
        code, out, _ = run(capsys, "verify", "--suite", "paper")
        assert code == 1
        assert "FAIL" in out
        assert "tilde-factors-k5" in out

    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper")
        assert code == 0
        assert "passed, 0 failed" in out


class TestPlotCommand:
    def test_lines_csv(self, capsys):
        code, out, _ = run(
            capsys, "plot", "--figure", "lines", "--range", "-8:8", "--samples", "65"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == list(
            ("figure", "curve_id", "color_index", "x_num", "x_den", "y_num", "y_den")
        )
        assert len(rows) == 1 + 6 * 65

    def test_center_tilde_points_exact(self, capsys):
        code, out, _ = run(
            capsys, "plot", "--figure", "center-tilde", "--range", "-8:8", "--samples", "17"
        )
        assert code == 0
        pres = center_ideal_rank1(5)
        factors = {
            f"component-m{m}": f for f, ((m,), _) in zip(pres.factors, pres.components)
        }
        for row in list(csv.reader(io.StringIO(out)))[1:]:
            point = (
                Fraction(int(row[3]), int(row[4])),
                Fraction(int(row[5]), int(row[6])),
            )
            assert factors[row[1]].evaluate(point) == 0

    def test_render_alongside_csv(self, capsys, tmp_path):
        target = tmp_path / "graded.csv"
        code, _, err = run(
            capsys,
            "plot", "--figure", "graded", "--range", "-4:4", "--samples", "9",
            "--out", str(target),
        )
        assert code == 0
        assert target.exists()
        figure = tmp_path / "graded.svg"
        assert figure.exists()
        assert "figure written" in err

    def test_png_render(self, capsys, tmp_path):
        target = tmp_path / "hc.csv"
        code, _, _ = run(
            capsys,
            "plot", "--figure", "hc-category", "--range", "-6:6", "--samples", "21",
            "--cutoff", "5", "--out", str(target), "--render-format", "png",
        )
        assert code == 0
        assert (tmp_path / "hc.png").exists()

    def test_no_render(self, capsys, tmp_path):
        target = tmp_path / "lines.csv"
        code, _, _ = run(
            capsys,
            "plot", "--figure", "lines", "--out", str(target), "--no-render",
        )
        assert code == 0
        assert not (tmp_path / "lines.svg").exists()

    def test_bad_figure_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["plot", "--figure", "mystery"])
        assert exc.value.code == 2

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "plot", "--figure", "lines", "--range", "8")
        assert code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
