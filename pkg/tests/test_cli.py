"""CLI surface: golden JSON/CSV documents, exit codes, figure boundaries."""

import json
from pathlib import Path

from diagalg import cli
from diagalg.errors import InternalDefectError

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def check_golden(capsys, name, *argv):
    code, out, _ = run_cli(capsys, *argv)
    assert code == cli.EXIT_OK
    expected = (GOLDEN / name).read_text()
    assert out == expected


# ---------------------------------------------------------------------------
# golden documents, one per subcommand

def test_golden_classify(capsys):
    check_golden(capsys, "classify.json", "classify", "--m", "3", "--n", "3",
                 "--d", "4", "--e", "2", "--g", "1", "--h", "1",
                 "--format", "json")


def test_golden_hilbert(capsys):
    check_golden(capsys, "hilbert.json", "hilbert", "--m", "2", "--n", "2",
                 "--d", "1", "--e", "1", "--k-max", "4", "--format", "json")


def test_golden_lcdim(capsys):
    check_golden(capsys, "lcdim.json", "lcdim", "--m", "3", "--n", "2",
                 "--d", "5", "--e", "1", "--format", "json")


def test_golden_frobenius(capsys):
    check_golden(capsys, "frobenius.json", "frobenius", "--mode", "graded",
                 "--m", "3", "--p", "5", "--poly", "x1^2 + x2*x3",
                 "--format", "json")


def test_golden_rees(capsys):
    check_golden(capsys, "rees.json", "rees", "--m", "3", "--k", "4",
                 "--s", "2", "--g", "1", "--h", "1", "--i-max", "3",
                 "--format", "json")


def test_golden_figure_csv(capsys):
    check_golden(capsys, "figure.csv", "figure", "--m", "3", "--n", "3",
                 "--d-max", "4", "--e-max", "3", "--format", "csv")


def test_json_documents_are_versioned(capsys):
    for argv in (
        ["classify", "--m", "3", "--n", "3", "--d", "1", "--e", "1",
         "--format", "json"],
        ["hilbert", "--m", "2", "--n", "2", "--d", "1", "--e", "1",
         "--format", "json"],
        ["lcdim", "--m", "2", "--n", "2", "--d", "1", "--e", "1",
         "--format", "json"],
        ["frobenius", "--mode", "fpure", "--m", "2", "--n", "0", "--p", "2",
         "--poly", "x1*x2", "--format", "json"],
        ["rees", "--a", "-3", "--dim", "3", "--k", "2", "--s", "2",
         "--format", "json"],
        ["figure", "--m", "3", "--n", "3", "--d-max", "2", "--e-max", "2",
         "--format", "json"],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == cli.EXIT_OK
        doc = json.loads(out)
        assert doc["schema"].startswith("diagalg/") and doc["schema"].endswith("/1")


# ---------------------------------------------------------------------------
# behavior details per subcommand

def test_hilbert_values(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--m", "2", "--n", "2",
                           "--d", "1", "--e", "1", "--k-max", "3",
                           "--format", "csv")
    assert code == cli.EXIT_OK
    assert out.splitlines() == ["k,dim", "0,1", "1,3", "2,5", "3,7"]


def test_frobenius_sampled_form_seeded(capsys):
    argv = ["frobenius", "--mode", "bigraded", "--m", "3", "--n", "3",
            "--d", "1", "--e", "1", "--p", "7", "--seed", "3",
            "--format", "json"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == cli.EXIT_OK
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["certificate"]["verdict"] in ("f_regular", "inconclusive")


def test_frobenius_fpure_text(capsys):
    code, out, _ = run_cli(capsys, "frobenius", "--mode", "fpure", "--m", "3",
                           "--n", "0", "--p", "3", "--poly", "x1*x2*x3")
    assert code == cli.EXIT_OK
    assert "F-pure over F_3: True" in out


def test_rees_ci_mode(capsys):
    code, out, _ = run_cli(capsys, "rees", "--m", "4", "--degrees", "2,2",
                           "--g", "3", "--h", "1", "--format", "json")
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["mode"] == "ci" and doc["cohen_macaulay"] is True


def test_classify_text_mentions_caveat(capsys):
    code, out, _ = run_cli(capsys, "classify", "--m", "2", "--n", "3",
                           "--d", "5", "--e", "1")
    assert code == cli.EXIT_OK
    assert "caveat" in out and "normal" in out


def test_figure_text_grid(capsys):
    code, out, _ = run_cli(capsys, "figure", "--m", "3", "--n", "3",
                           "--d-max", "3", "--e-max", "3")
    assert code == cli.EXIT_OK
    assert "legend" in out
    assert "F*" in out  # the (1, 1) Gorenstein F-regular cell


# ---------------------------------------------------------------------------
# exit codes

def test_exit_code_parse_error(capsys):
    code, _, err = run_cli(capsys, "frobenius", "--mode", "graded", "--m", "3",
                           "--p", "5", "--poly", "x1^-1")
    assert code == cli.EXIT_PRECONDITION
    assert "parse error" in err


def test_exit_code_precondition(capsys):
    code, _, err = run_cli(capsys, "classify", "--m", "1", "--n", "2",
                           "--d", "1", "--e", "1")
    assert code == cli.EXIT_PRECONDITION
    assert "error" in err
    code, _, err = run_cli(capsys, "figure", "--m", "2", "--n", "3")
    assert code == cli.EXIT_PRECONDITION


def test_exit_code_internal_defect(capsys, monkeypatch):
    # Internal defects cannot be triggered through valid inputs, so install a
    # synthetic one and confirm main() maps it to exit code 3.
    def boom(args):
        raise InternalDefectError("synthetic defect")

    monkeypatch.setattr(cli, "cmd_classify", boom)
    code = cli.main(["classify", "--m", "3", "--n", "3", "--d", "1",
                     "--e", "1"])
    captured = capsys.readouterr()
    assert code == cli.EXIT_INTERNAL
    assert "internal defect" in captured.err


# ---------------------------------------------------------------------------
# figure boundary lines

def test_figure_regions_match_line_equations():
    for m in (3, 4, 5):
        for n in (3, 4, 5):
            grid = cli.figure_grid(m, n, 12, 12)
            for (d, e), report in grid.items():
                assert report.cohen_macaulay == (d - m + 1 <= e <= d + n - 1)
                assert report.gorenstein == (e == d - m + n)
                assert report.f_regular_type_generic == (d <= m - 1 and e <= n - 1)
                assert report.rational_singularities_generic == (
                    report.cohen_macaulay and (d < m or e < n))
