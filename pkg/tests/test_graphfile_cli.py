import json

import pytest
from hypothesis import given

from conftest import signed_graphs
from signed_energy.cli import RunConfig, UsageError, main, parse_range
from signed_energy.families import lollipop, path
from signed_energy.graphfile import GraphFileError, format_graph, parse_graph, read_graph, write_graph


class TestGraphFile:
    @given(signed_graphs())
    def test_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_comments_and_blanks(self):
        text = "# a path\n\n3 2\n0 1 +   # first\n\n1 2 -\n"
        g = parse_graph(text)
        assert g.edges == ((0, 1, 1), (1, 2, -1))

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3 2\n0 1 +\n", 2),
            ("3\n", 1),
            ("3 1\n0 1 *\n", 2),
            ("3 2\n0 1 +\n0 1 -\n", 3),
            ("3 1\n0 x +\n", 2),
            ("3 1\n0 5 +\n", 2),
            ("3 1\n0 1\n", 2),
            ("# only\n\n3 1\n\n2 2 +\n", 5),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(GraphFileError) as info:
            parse_graph(text, "t.txt")
        assert info.value.line == line
        assert str(info.value).startswith(f"t.txt:{line}:")

    def test_empty(self):
        with pytest.raises(GraphFileError):
            parse_graph("# nothing\n")

    def test_files(self, tmp_path):
        g = lollipop(7, 4, False)
        write_graph(g, tmp_path / "g.txt")
        assert read_graph(tmp_path / "g.txt") == g


class TestConfig:
    def test_range(self):
        assert parse_range("4..7") == [4, 5, 6, 7]
        assert parse_range("4-6") == [4, 5, 6]
        assert parse_range("5,7") == [5, 7]
        with pytest.raises(UsageError):
            parse_range("a..b")

    def test_validation(self):
        with pytest.raises(UsageError):
            RunConfig(tol_eigen=0)
        with pytest.raises(UsageError):
            RunConfig(workers=0)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCli:
    def test_charpoly_family(self, capsys):
        code, out, _ = run(capsys, "charpoly", "lollipop:n=6,g=4,unbalanced")
        assert code == 0 and out.strip() == "x^6 - 6x^4 + 10x^2 - 4"

    def test_charpoly_single_vertex(self, capsys, tmp_path):
        (tmp_path / "one.txt").write_text("1 0\n")
        code, out, _ = run(capsys, "charpoly", str(tmp_path / "one.txt"))
        assert code == 0 and out.strip() == "x"

    def test_charpoly_all_engines(self, capsys):
        code, out, _ = run(capsys, "charpoly", "cycle:n=7,unbalanced", "--engine", "all")
        assert code == 0
        lines = out.strip().splitlines()
        assert len({line.split(": ")[1] for line in lines[:3]}) == 1

    def test_oracle_limit_flag(self, capsys):
        code, _, err = run(capsys, "charpoly", "path:n=9", "--engine", "sachs", "--oracle-limit", "8")
        assert code == 2 and "limit" in err

    def test_energy_methods(self, capsys):
        code, out, _ = run(capsys, "energy", "lollipop:n=6,g=4,unbalanced", "--method", "all")
        assert code == 0
        assert out.count("8.054678984") == 3
        assert "(coulson-pairing)" in out

    def test_energy_json(self, capsys):
        code, out, _ = run(capsys, "energy", "path:n=2", "--format", "json-lines")
        rec = json.loads(out)
        assert code == 0 and rec["method"] == "eigen-sum" and rec["energy"] == pytest.approx(2)

    def test_pairing_on_odd_cycle(self, capsys):
        code, _, err = run(capsys, "energy", "cycle:n=5", "--method", "pairing")
        assert code == 2 and err

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3 2\n0 1 +\n1 2 ?\n")
        code, _, err = run(capsys, "energy", str(bad))
        assert code == 2 and f"{bad}:3:" in err

    def test_missing_input(self, capsys):
        code, _, _ = run(capsys, "energy", "/no/such/file")
        assert code == 2

    def test_compare_file_vs_family(self, capsys, tmp_path):
        write_graph(path(6), tmp_path / "p6.txt")
        code, out, _ = run(capsys, "compare", str(tmp_path / "p6.txt"), "lollipop:n=6,g=4,unbalanced")
        assert code == 0 and out.splitlines()[0] == "Less (quasi-order)"

    def test_compare_numeric(self, capsys):
        code, out, _ = run(capsys, "compare", "cycle:n=7", "lollipop:n=7,g=4,unbalanced", "--format", "json-lines")
        rec = json.loads(out)
        assert (rec["relation"], rec["method"]) == ("Greater", "numeric")

    def test_enumerate_json_stable(self, capsys):
        first = run(capsys, "enumerate", "6", "--format", "json-lines")
        second = run(capsys, "enumerate", "6", "--format", "json-lines", "--workers", "2")
        assert first == second and first[0] == 0
        records = [json.loads(line) for line in first[1].splitlines()]
        assert sum("code" in r for r in records) == 26

    @pytest.mark.parametrize(
        "which, rng, code",
        [
            ("theorem-3.12", "4..7", 0),
            ("theorem-3.12", "13", 0),
            ("lemma-3.3", "4..8", 0),
            ("corollary-3.4", "5..8", 0),
            ("corollary-3.4", "4", 1),
            ("chain-2.5", "4..13", 0),
            ("engines", "3..6", 0),
        ],
    )
    def test_verify(self, capsys, which, rng, code):
        got, out, _ = run(capsys, "verify", rng, "--which", which)
        assert got == code
        assert out.strip().splitlines()[-1] == ("PASS" if code == 0 else "FAIL")

    def test_verify_bad_which(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "4", "--which", "lemma-9.9"])
        assert info.value.code == 2
        capsys.readouterr()

    def test_verify_out_of_range(self, capsys):
        code, _, _ = run(capsys, "verify", "2", "--which", "lemma-3.3")
        assert code == 2
