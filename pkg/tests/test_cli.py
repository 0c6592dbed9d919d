"""Tests for the fmzs command line."""

import argparse

import pytest

from fmzs import __version__
from fmzs import config as config_module
from fmzs.cli import build_parser, main, parse_families, parse_weights
from fmzs.relations import PairFamily
from fmzs.systems import MAGIC


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.setattr(config_module, "_run_config", None)
    monkeypatch.delenv("FMZS_THREADS", raising=False)
    monkeypatch.delenv("FMZS_CONFIG", raising=False)


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "fmzs.yaml"
    path.write_text(f"output_dir: {tmp_path / 'data'}\nlarge_weight: 12\n")
    return path


@pytest.fixture
def run(config_path):
    """Run the CLI with the test config."""

    def _run(*argv):
        return main(["--config", str(config_path), *argv])

    return _run


class TestArgumentParsing:
    """Weight ranges, families and parser-level errors."""

    @pytest.mark.parametrize(
        ("text", "weights"),
        [("2..12", list(range(2, 13))), ("7, 8", [7, 8]), ("2..5,9", [2, 3, 4, 5, 9]), ("4,4", [4])],
    )
    def test_parse_weights(self, text, weights):
        assert parse_weights(text) == weights

    @pytest.mark.parametrize("text", ["5..2", "x", "", "-1", "2..y"])
    def test_parse_weights_rejects(self, text):
        with pytest.raises(argparse.ArgumentTypeError, match="invalid weight range"):
            parse_weights(text)

    def test_parse_families(self):
        assert parse_families("eds, knt") == [PairFamily.EDS, PairFamily.KNT]
        with pytest.raises(argparse.ArgumentTypeError, match="unknown pair family"):
            parse_families("eds,zeta")

    def test_bad_weights_exit_with_usage_error(self, run):
        with pytest.raises(SystemExit) as excinfo:
            run("report", "--weights", "x")
        assert excinfo.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert capsys.readouterr().out.strip() == f"fmzs {__version__}"


class TestGen:
    """fmzs gen."""

    def test_text_system(self, run, tmp_path, capsys):
        out = tmp_path / "eds_w4.txt"
        assert run("gen", "--weight", "4", "--out", str(out)) == 0
        assert capsys.readouterr().out.strip() == "weight 4 eds: Rels 4, MeanNum 2.50"
        assert out.read_text().splitlines()[-4:] == ["2 3 4 0", "1 2 3 0", "4 0", "1 2 3 0"]
        assert (tmp_path / "eds_w4.columns").read_text().startswith("# weight 4")

    def test_compact_system(self, run, tmp_path):
        out = tmp_path / "knt_w6.mzf"
        assert run("gen", "--weight", "6", "--family", "knt", "--compact", "--threads", "2", "--out", str(out)) == 0
        assert out.read_bytes()[:4] == MAGIC

    def test_small_weight_is_an_input_error(self, run, tmp_path):
        assert run("gen", "--weight", "1", "--out", str(tmp_path / "w1.txt")) == 2

    def test_guarded_weight(self, run, tmp_path):
        out = tmp_path / "eds_w12.txt"
        assert run("gen", "--weight", "12", "--out", str(out)) == 2
        assert not out.exists()


class TestSolve:
    """fmzs solve."""

    @pytest.fixture
    def system_file(self, run, tmp_path):
        path = tmp_path / "eds_w5.txt"
        assert run("gen", "--weight", "5", "--out", str(path)) == 0
        return path

    def test_solve_with_dumps_and_oracle(self, run, system_file, tmp_path, capsys):
        capsys.readouterr()
        pivots = tmp_path / "dumps" / "eds_w5.pivots"
        basis = tmp_path / "dumps" / "eds_w5.basis"
        code = run(
            "solve", "--in", str(system_file), "--oracle", "--dump-pivots", str(pivots), "--dump-basis", str(basis)
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "rank 6, corank 2" in out
        assert "oracle: agrees" in out
        assert pivots.read_text().startswith("# n=8 rank=6 corank=2")
        lines = basis.read_text().splitlines()
        assert lines[0] == "# relation basis: input row numbers"
        assert len(lines) == 7

    @pytest.mark.parametrize("algebra", ["bitset", "field"])
    def test_algebras(self, run, system_file, algebra, capsys):
        assert run("solve", "--in", str(system_file), "--algebra", algebra) == 0
        assert "rank 6, corank 2" in capsys.readouterr().out

    def test_compact_input(self, run, tmp_path, capsys):
        path = tmp_path / "eds_w6.mzf"
        assert run("gen", "--weight", "6", "--compact", "--out", str(path)) == 0
        assert run("solve", "--in", str(path), "--family", "eds") == 0
        assert "rank 14, corank 2" in capsys.readouterr().out

    def test_oracle_disagreement(self, run, system_file, mocker):
        mocker.patch("fmzs.cli.dense_eliminate_oracle", return_value=(0, frozenset()))
        assert run("solve", "--in", str(system_file), "--oracle") == 1

    def test_parse_error(self, run, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("# weight=4\n1 x 0\n")
        assert run("solve", "--in", str(path)) == 2

    def test_missing_file(self, run, tmp_path):
        assert run("solve", "--in", str(tmp_path / "missing.txt")) == 2


class TestReport:
    """fmzs report."""

    def test_depth_report(self, run, tmp_path, capsys):
        out_dir = tmp_path / "tables"
        assert run("report", "--weights", "2..6", "--out-dir", str(out_dir)) == 0
        out = capsys.readouterr().out
        assert "Depth-graded dimensions (eds)" in out
        assert "eds recurrence exceptions: none" in out
        assert "MISMATCH" not in out
        assert (out_dir / "depth_eds.tsv").exists()
        assert (out_dir / "eds_w6.pivots").exists()

    def test_expected_only(self, run, tmp_path, capsys):
        assert run("report", "--weights", "12", "--expected", "bk", "--markdown", "--out-dir", str(tmp_path)) == 0
        out = capsys.readouterr().out
        assert "**Broadhurst-Kreimer dimensions**" in out
        assert "| 12 | 0 | 1 | 3 | 6 | 2 | 0 | 0 | 12 |" in out
        assert not list(tmp_path.glob("eds_w*"))

    def test_total_table_for_several_families(self, run, tmp_path, capsys):
        code = run("report", "--weights", "4..7", "--family", "eds,mjpo", "--table", "total", "--out-dir", str(tmp_path))
        assert code == 0
        out = capsys.readouterr().out
        assert "Dimensions by family" in out
        assert "mjpo recurrence exceptions: 7" in out

    def test_mismatch_exit_code(self, run, tmp_path, capsys, mocker):
        mocker.patch("fmzs.analysis.report.published_dimension", return_value=99)
        assert run("report", "--weights", "4", "--out-dir", str(tmp_path)) == 1
        assert "MISMATCH k=4 total: computed 1, expected 99" in capsys.readouterr().out

    def test_guard(self, run, tmp_path):
        assert run("report", "--weights", "11..12", "--out-dir", str(tmp_path)) == 2
        assert not list(tmp_path.glob("eds_w*"))


class TestVerify:
    """fmzs verify."""

    def test_eds_passes(self, run, capsys):
        assert run("verify", "--weights", "1..6") == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 5
        assert lines[0] == "k=2 eds: PASS (pivotless columns are exactly the Hoffman indices)"

    def test_knt_fails(self, run, capsys):
        assert run("verify", "--weights", "8", "--family", "knt") == 1
        assert capsys.readouterr().out.startswith("k=8 knt: FAIL (pivotless non-Hoffman:")


class TestReduce:
    """fmzs reduce."""

    @pytest.mark.parametrize(
        ("index", "expected"),
        [("3,1", "(3,1) = (2,2)"), ("(2,2)", "(2,2) = (2,2)"), ("4", "(4) = 0")],
    )
    def test_reduced_forms(self, run, capsys, index, expected):
        assert run("reduce", "--index", index) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_graded(self, run, capsys):
        assert run("reduce", "--index", "4,1", "--graded") == 0
        assert capsys.readouterr().out.strip() == "(4,1) = (2,3) + (3,2) (depth-graded)"

    @pytest.mark.parametrize("index", ["1,3", "3,x", "2,1,1,1,0"])
    def test_bad_index(self, run, index):
        assert run("reduce", "--index", index) == 2

    def test_large_index_needs_opt_in(self, run):
        assert run("reduce", "--index", "10,2") == 2


class TestAllowLarge:
    """The large-run opt-in before or after the subcommand."""

    @pytest.mark.parametrize(
        ("argv", "expected"),
        [
            (["--allow-large", "reduce", "--index", "3,1"], True),
            (["reduce", "--index", "3,1", "--allow-large"], True),
            (["gen", "--weight", "18", "--allow-large", "--out", "w18.txt"], True),
            (["verify", "--weights", "4", "--allow-large"], True),
            (["reduce", "--index", "3,1"], False),
        ],
    )
    def test_flag_position(self, argv, expected):
        assert build_parser().parse_args(argv).allow_large is expected

    def test_solve_has_no_guard_flag(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["solve", "--in", "x.txt", "--allow-large"])

    def test_opt_in_after_subcommand(self, tmp_path, capsys):
        path = tmp_path / "small.yaml"
        path.write_text("large_weight: 5\n")
        assert main(["--config", str(path), "reduce", "--index", "4,1", "--graded"]) == 2
        capsys.readouterr()
        assert main(["--config", str(path), "reduce", "--index", "4,1", "--graded", "--allow-large"]) == 0
        assert capsys.readouterr().out.strip() == "(4,1) = (2,3) + (3,2) (depth-graded)"
