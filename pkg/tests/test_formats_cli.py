import json
import random

import pytest

from unipolar import formats
from unipolar.cli import main
from unipolar.formats import ParseError, parse_dimacs, parse_edgelist

from helpers import clique, cycle, graph_from_code, star


DIMACS_C5 = "c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"


class TestDimacs:
    def test_parse_c5(self):
        g = parse_dimacs(DIMACS_C5)
        assert g == cycle(5)

    def test_round_trip_random(self):
        rng = random.Random(1)
        for _ in range(40):
            n = rng.randint(0, 9)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            assert parse_dimacs(formats.serialize_dimacs(g)) == g

    def test_malformed_edge_line_names_line_number(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_dimacs("c x\np edge 3 1\ne 1\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 3 1\ne 1 4\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_dimacs("e 1 2\n")

    def test_self_loop(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_dimacs("p edge 3 1\ne 2 2\n")


class TestEdgelist:
    def test_round_trip_random(self):
        rng = random.Random(2)
        for _ in range(40):
            n = rng.randint(0, 9)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            assert parse_edgelist(formats.serialize_edgelist(g)) == g

    def test_comments_and_blanks(self):
        g = parse_edgelist("# a path\n3\n\n0 1\n1 2  # tail comment\n")
        assert g.edge_count == 2

    def test_bad_pair(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edgelist("3\n0\n")


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestRecogniseCommand:
    def test_k4_exit_zero_and_schema(self, tmp_path, capsys):
        path = write(tmp_path, "k4.col", formats.serialize_dimacs(clique(4)))
        code = main(["recognise", path])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["verdict"] == "unipolar"
        assert set(doc) == {"verdict", "central", "side_cliques", "counters", "wall_ms", "n", "m"}
        assert set(doc["counters"]) == {"adjacency_tests", "absorptions"}
        assert doc["n"] == 4 and doc["m"] == 6
        got = sorted(doc["central"]) + sorted(v for s in doc["side_cliques"] for v in s)
        assert sorted(got) == [0, 1, 2, 3]

    def test_c5_gsg_exit_one_neither(self, tmp_path, capsys):
        path = write(tmp_path, "c5.col", DIMACS_C5)
        code = main(["recognise", path, "--gsg"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 1
        assert doc["verdict"] == "neither"
        assert doc["central"] == [] and doc["side_cliques"] == []

    def test_c5_plain_not_unipolar(self, tmp_path, capsys):
        path = write(tmp_path, "c5.col", DIMACS_C5)
        assert main(["recognise", path]) == 1
        assert json.loads(capsys.readouterr().out)["verdict"] == "not-unipolar"

    def test_malformed_input_exit_two(self, tmp_path, capsys):
        path = write(tmp_path, "bad.col", "p edge 3 1\ne 1\n")
        assert main(["recognise", path]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file_exit_two(self, tmp_path):
        assert main(["recognise", str(tmp_path / "absent.col")]) == 2

    def test_certificate_written(self, tmp_path, capsys):
        path = write(tmp_path, "k4.col", formats.serialize_dimacs(clique(4)))
        cert = tmp_path / "cert.json"
        assert main(["recognise", path, "--certificate", str(cert)]) == 0
        on_disk = json.loads(cert.read_text())
        assert on_disk == json.loads(capsys.readouterr().out)

    def test_edgelist_format(self, tmp_path, capsys):
        path = write(tmp_path, "k4.txt", formats.serialize_edgelist(clique(4)))
        assert main(["recognise", path, "--format", "edgelist"]) == 0
        capsys.readouterr()


class TestSolveCommand:
    def test_star_coloring(self, tmp_path, capsys):
        path = write(tmp_path, "star.col", formats.serialize_dimacs(star(3)))
        assert main(["solve", path, "--problem", "coloring"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["colors"] == 2
        assert len(doc["color_of"]) == 4

    def test_k5_stable_set(self, tmp_path, capsys):
        path = write(tmp_path, "k5.col", formats.serialize_dimacs(clique(5)))
        assert main(["solve", path, "--problem", "stable-set"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == 1 and len(doc["vertices"]) == 1

    def test_c5_any_problem_exit_one(self, tmp_path, capsys):
        path = write(tmp_path, "c5.col", DIMACS_C5)
        for problem in ("clique", "coloring", "stable-set", "clique-cover"):
            assert main(["solve", path, "--problem", problem]) == 1
        capsys.readouterr()

    def test_co_unipolar_translation(self, tmp_path, capsys):
        # K(3,3) is the complement of two disjoint triangles: unipolar only
        # from the complement side; answers must describe the original graph
        from unipolar import complement, graph_from_edges, recognise
        from unipolar import oracle as orc

        two_triangles = graph_from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        g = complement(two_triangles)
        assert recognise(g) is None and recognise(complement(g)) is not None
        path = write(tmp_path, "co.col", formats.serialize_dimacs(g))

        assert main(["solve", path, "--problem", "clique"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == orc.oracle_omega(g) == 2

        assert main(["solve", path, "--problem", "coloring"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["colors"] == orc.oracle_chi(g)
        for u, v in g.edges():
            assert doc["color_of"][u] != doc["color_of"][v]

        assert main(["solve", path, "--problem", "stable-set"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == orc.oracle_alpha(g)

        assert main(["solve", path, "--problem", "clique-cover"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["count"] == orc.oracle_cover(g)


class TestGenCommand:
    def test_writes_instance_and_certificate(self, tmp_path, capsys):
        out = tmp_path / "inst.col"
        cert = tmp_path / "inst.cert.json"
        code = main([
            "gen", "--n", "30", "--seed", "5",
            "-o", str(out), "--certificate", str(cert),
        ])
        assert code == 0
        capsys.readouterr()
        g = parse_dimacs(out.read_text())
        assert g.n == 30
        doc = json.loads(cert.read_text())
        assert doc["verdict"] == "unipolar"
        # re-validate the planted certificate against the written instance
        from unipolar import VertexSet, check_representation
        from unipolar.recognition import Representation

        rep = Representation(
            VertexSet.of(30, doc["central"]),
            tuple(VertexSet.of(30, s) for s in doc["side_cliques"]),
        )
        assert check_representation(g, rep)
        assert main(["recognise", str(out)]) == 0
        capsys.readouterr()

    def test_unwritable_path_exit_two(self, tmp_path, capsys):
        assert main(["gen", "--n", "5", "-o", str(tmp_path / "no" / "dir.col")]) == 2
        capsys.readouterr()

    def test_deterministic_output(self, tmp_path, capsys):
        a = tmp_path / "a.col"
        b = tmp_path / "b.col"
        assert main(["gen", "--n", "12", "--seed", "9", "-o", str(a)]) == 0
        assert main(["gen", "--n", "12", "--seed", "9", "-o", str(b)]) == 0
        capsys.readouterr()
        assert a.read_text() == b.read_text()


class TestBenchCommand:
    def test_table_shape(self, capsys):
        assert main(["bench", "--sizes", "12,24", "--reps", "1", "--seed", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3  # header + one row per size
        first_row = lines[1].split()
        second_row = lines[2].split()
        assert first_row[0] == "12" and second_row[0] == "24"
        assert first_row[3] == "-"  # no ratio for the smallest size
        float(second_row[3])  # ratio parses as a number

    def test_hashes_stable_across_runs(self, capsys):
        main(["bench", "--sizes", "10", "--reps", "1", "--seed", "4"])
        first = capsys.readouterr().out.strip().splitlines()[-1].split()[-1]
        main(["bench", "--sizes", "10", "--reps", "1", "--seed", "4"])
        second = capsys.readouterr().out.strip().splitlines()[-1].split()[-1]
        assert first == second

    def test_rejects_unsorted_sizes(self, capsys):
        assert main(["bench", "--sizes", "20,10"]) == 2
        capsys.readouterr()


class TestOracleCheckCommand:
    def test_small_sweep_passes(self, capsys):
        assert main(["oracle-check", "--max-n", "4", "--samples", "30", "--sample-n", "8"]) == 0
        out = capsys.readouterr().out
        assert "OK" in out and "n=4: 64 graphs" in out
