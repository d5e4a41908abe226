"""End-to-end CLI behavior through main(argv)."""

import pytest

from majroman.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_complete_3(self, capsys):
        code, out, _ = run(capsys, "solve", "--family", "complete", "--n", "3")
        assert code == 0
        assert "optimum:  2" in out
        assert out.strip().splitlines()[-1].startswith("RESULT optimum=2")

    def test_deterministic_stdout(self, capsys):
        _, first, _ = run(capsys, "solve", "--family", "wheel", "--n", "8")
        _, second, _ = run(capsys, "solve", "--family", "wheel", "--n", "8")
        assert first == second

    def test_solve_from_file(self, capsys, tmp_path):
        path = tmp_path / "k3.el"
        path.write_text("3 3\n0 1\n0 2\n1 2\n")
        code, out, _ = run(capsys, "solve", "--file", str(path))
        assert code == 0 and "optimum=2" in out

    def test_requires_input(self, capsys):
        code, _, err = run(capsys, "solve")
        assert code == 1 and "error:" in err


class TestGen:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "path", "--n", "3")
        assert code == 0
        assert out.startswith("3 2\n0 1\n1 2\n")

    def test_to_file_and_back(self, capsys, tmp_path):
        path = tmp_path / "w6.el"
        code, _, _ = run(
            capsys, "gen", "--family", "wheel", "--n", "6", "-o", str(path)
        )
        assert code == 0
        code, out, _ = run(capsys, "solve", "--file", str(path))
        assert code == 0 and "optimum=-1" in out

    def test_seed_positions(self, capsys):
        _, after, _ = run(
            capsys, "gen", "--family", "random_tree", "--n", "7", "--seed", "3"
        )
        _, before, _ = run(
            capsys, "--seed", "3", "gen", "--family", "random_tree", "--n", "7"
        )
        assert after == before

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "hypercube", "--n", "3")
        assert code == 1 and "unknown family" in err


class TestCert:
    def test_cpath_validate(self, capsys):
        code, out, _ = run(
            capsys, "cert", "--theorem", "cpath", "--n", "12", "--validate"
        )
        assert code == 0
        assert "valid=True" in out and "claimed:      -1" in out

    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "cert", "--theorem", "riemann", "--n", "5")
        assert code == 1 and "unknown certificate theorem" in err


class TestCheck:
    def test_star_strict_all_match(self, capsys):
        code, out, _ = run(
            capsys, "check", "--theorem", "star", "--range", "2..12", "--strict"
        )
        assert code == 0
        assert "match=11" in out
        assert "MISMATCH" not in out

    def test_strict_flags_corona_stated_mismatch(self, capsys):
        code, out, _ = run(
            capsys, "check", "--theorem", "corona_upper", "--strict"
        )
        assert code == 2
        assert "MISMATCH" in out

    def test_csv_output(self, capsys, tmp_path):
        path = tmp_path / "out.csv"
        code, _, _ = run(
            capsys,
            "check",
            "--theorem",
            "complete",
            "--range",
            "2..5",
            "--csv",
            str(path),
        )
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "spec,predicted,cert_weight,cert_valid,optimum,verdict"
        assert "K_3,2,2,true,2,MATCH" in lines

    def test_malformed_range(self, capsys):
        code, _, err = run(
            capsys, "check", "--theorem", "star", "--range", "2-12"
        )
        assert code == 1 and "malformed range" in err


class TestBoundsAndLemma:
    def test_bounds_family(self, capsys):
        code, out, _ = run(capsys, "bounds", "--family", "star", "--n", "5")
        assert code == 0
        assert "star: exact -2" in out
        assert "delta lower bound: -2" in out

    def test_bounds_tree_file(self, capsys, tmp_path):
        path = tmp_path / "p4.el"
        path.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "bounds", "--tree", str(path))
        assert code == 0
        assert "gamma=2" in out and "support_leaf=2" in out

    def test_bounds_requires_input(self, capsys):
        code, _, err = run(capsys, "bounds")
        assert code == 1 and "error:" in err

    def test_lemma_grid(self, capsys):
        code, out, _ = run(capsys, "lemma", "--n-max", "100", "--m-max", "100")
        assert code == 0
        assert "inequality holds on 100x98 grid" in out
        assert "RESULT holds=True checked=9800" in out


class TestGlobalFlags:
    def test_floor_mode_marked_experimental(self, capsys):
        code, out, _ = run(
            capsys,
            "--threshold-mode",
            "floor",
            "solve",
            "--family",
            "path",
            "--n",
            "4",
        )
        assert code == 0
        assert "EXPERIMENTAL" in out

    def test_missing_subcommand(self, capsys):
        code, _, err = run(capsys)
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "--file", "/no/such/file.el")
        assert code == 1 and "error:" in err
