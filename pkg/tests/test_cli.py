"""CLI subcommands: outputs, exit codes, determinism."""

import csv
import io
from pathlib import Path

import pytest

from dualnet.cli import main

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"


@pytest.fixture
def clique_with_pendant(tmp_path):
    """Intersection-identical toy: 4-clique (unit weights) plus pendant path."""
    edges = [
        "k1 k2",
        "k1 k3",
        "k1 k4",
        "k2 k3",
        "k2 k4",
        "k3 k4",
        "k4 p1",
        "p1 p2",
    ]
    phys = tmp_path / "phys.el"
    conc = tmp_path / "conc.el"
    phys.write_text("\n".join(edges) + "\n")
    conc.write_text("\n".join(f"{e} 1.0" for e in edges) + "\n")
    return phys, conc


def run(args):
    return main([str(a) for a in args])


class TestDcs:
    def test_clique_density_on_intersection_identical_toy(
        self, clique_with_pendant, tmp_path, capsys
    ):
        phys, conc = clique_with_pendant
        out = tmp_path / "dcs.txt"
        code = run(
            ["dcs", "--physical", phys, "--conceptual", conc, "--delta", 1,
             "--output", out]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# density=1.500000")
        rank, score, rest = lines[1].split(" ", 2)
        assert rank == "1" and float(score) == pytest.approx(1.5)
        physical_side = rest.split("|")[0].split()
        assert sorted(physical_side) == ["k1", "k2", "k3", "k4"]

    def test_missing_file_exits_2(self, tmp_path, capsys):
        code = run(
            ["dcs", "--physical", tmp_path / "absent.el",
             "--conceptual", tmp_path / "absent2.el"]
        )
        assert code == 2
        assert "dualnet:" in capsys.readouterr().err

    def test_unalignable_network_exits_3(self, tmp_path, capsys):
        phys = tmp_path / "p.el"
        conc = tmp_path / "c.el"
        phys.write_text("a b\n")
        conc.write_text("a x 1.0\nx y 1.0\ny b 1.0\n")
        code = run(["dcs", "--physical", phys, "--conceptual", conc, "--delta", 1])
        assert code == 3
        assert "no alignable region" in capsys.readouterr().err

    def test_delta_zero_exits_2(self, clique_with_pendant, capsys):
        phys, conc = clique_with_pendant
        code = run(["dcs", "--physical", phys, "--conceptual", conc, "--delta", 0])
        assert code == 2

    def test_runs_on_bundled_toy_with_similarity(self, capsys):
        code = run(
            ["dcs", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el",
             "--similarity", TOY / "similarity.txt", "--delta", 4]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("# density=")

    def test_alignment_dump(self, clique_with_pendant, tmp_path):
        phys, conc = clique_with_pendant
        dump = tmp_path / "alignment.el"
        code = run(
            ["dcs", "--physical", phys, "--conceptual", conc, "--delta", 2,
             "--dump-alignment", dump, "--output", tmp_path / "out.txt"]
        )
        assert code == 0
        for line in dump.read_text().splitlines():
            assert line.split()[-1] in ("MATCH", "MISMATCH")


class TestCommunities:
    def test_k_caps_output(self, capsys):
        code = run(
            ["communities", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el", "--delta", 1, "--k", 25]
        )
        assert code == 0
        lines = [
            l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")
        ]
        assert 0 < len(lines) <= 25

    def test_k_equals_one(self, capsys):
        code = run(
            ["communities", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el", "--delta", 1, "--k", 1]
        )
        assert code == 0
        lines = [
            l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")
        ]
        assert len(lines) == 1
        assert lines[0].startswith("1 ")

    def test_invalid_k_exits_2(self, capsys):
        code = run(
            ["communities", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el", "--delta", 1, "--k", 0]
        )
        assert code == 2

    def test_toy_recovers_the_two_clusters(self, capsys):
        code = run(
            ["communities", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el", "--delta", 2, "--k", 2]
        )
        assert code == 0
        lines = [
            l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")
        ]
        groups = {frozenset(l.split("|")[0].split()[2:]) for l in lines}
        assert groups == {
            frozenset({"a1", "a2", "a3", "a4"}),
            frozenset({"b1", "b2", "b3", "b4"}),
        }


class TestBaseline:
    def test_runs_on_toy(self, capsys):
        code = run(
            ["baseline", "--physical", TOY / "physical.el",
             "--conceptual", TOY / "conceptual.el"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("# communities=")


class TestGenerate:
    def test_writes_three_files(self, tmp_path):
        code = run(
            ["generate", "--nodes", 60, "--physical-edges", 150,
             "--conceptual-edges", 200, "--communities", 3, "--seed", 7,
             "--out", tmp_path / "syn"]
        )
        assert code == 0
        assert (tmp_path / "syn.physical.el").exists()
        assert (tmp_path / "syn.conceptual.el").exists()
        truth = (tmp_path / "syn.truth.communities").read_text()
        assert len(truth.splitlines()) == 3

    def test_same_seed_identical_bytes(self, tmp_path):
        for prefix in ("one", "two"):
            run(
                ["generate", "--nodes", 40, "--physical-edges", 100,
                 "--conceptual-edges", 120, "--seed", 3,
                 "--out", tmp_path / prefix]
            )
        for suffix in (".physical.el", ".conceptual.el", ".truth.communities"):
            a = (tmp_path / f"one{suffix}").read_bytes()
            b = (tmp_path / f"two{suffix}").read_bytes()
            assert a == b

    def test_infeasible_spec_exits_2(self, tmp_path, capsys):
        code = run(
            ["generate", "--nodes", 5, "--physical-edges", 1000,
             "--conceptual-edges", 10, "--out", tmp_path / "bad"]
        )
        assert code == 2


class TestBench:
    def test_tiny_ladder_produces_csv(self, tmp_path):
        out = tmp_path / "timings.csv"
        code = run(
            ["bench", "--sizes", "40:90:40:120", "60:140:60:180",
             "--delta", 2, "--repeats", 1, "--communities", 2,
             "--timings-csv", out]
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 2
        assert all(float(r["t_dcs_ms"]) >= 0 for r in rows)

    def test_explicit_empty_size_list_gives_header_only(self, capsys):
        code = run(["bench", "--sizes", "--repeats", 1])
        assert code == 0
        out = capsys.readouterr().out
        assert out.strip() == (
            "experiment,nodes_p,edges_p,nodes_c,edges_c,"
            "t_load_ms,t_align_ms,t_dcs_ms,t_louv_ms"
        )

    def test_comparison_rows(self, tmp_path):
        out = tmp_path / "compare.csv"
        code = run(
            ["bench", "--sizes", "--repeats", 1,
             "--nodes", 40, "--physical-edges", 100, "--conceptual-edges", 140,
             "--communities", 2, "--compare-networks", 3,
             "--timings-csv", tmp_path / "t.csv", "--compare-csv", out]
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert [r["method"] for r in rows] == ["framework", "baseline"]


class TestEvaluate:
    def test_identical_files_score_one(self, tmp_path, capsys):
        known = tmp_path / "known.txt"
        known.write_text("a b c\nd e\n")
        code = run(["evaluate", "--known", known, "--extracted", known])
        assert code == 0
        out = capsys.readouterr().out
        assert "sn=1.000000" in out
        assert "ppv=1.000000" in out
        assert "acc=1.000000" in out

    def test_reads_extraction_format(self, tmp_path, capsys):
        known = tmp_path / "known.txt"
        known.write_text("a b\nc d\n")
        extracted = tmp_path / "extracted.txt"
        extracted.write_text("# communities=2\n1 0.25 a b | x y\n2 0.10 c d | z w\n")
        code = run(["evaluate", "--known", known, "--extracted", extracted])
        assert code == 0
        assert "acc=1.000000" in capsys.readouterr().out

    def test_conceptual_side(self, tmp_path, capsys):
        known = tmp_path / "known.txt"
        known.write_text("x y\nz w\n")
        extracted = tmp_path / "extracted.txt"
        extracted.write_text("1 0.25 a b | x y\n2 0.10 c d | z w\n")
        code = run(
            ["evaluate", "--known", known, "--extracted", extracted,
             "--side", "conceptual"]
        )
        assert code == 0
        assert "acc=1.000000" in capsys.readouterr().out

    def test_empty_file_exits_2(self, tmp_path, capsys):
        known = tmp_path / "known.txt"
        known.write_text("a b\n")
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing\n")
        code = run(["evaluate", "--known", known, "--extracted", empty])
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize("delta", [1, 2])
    def test_communities_byte_identical(self, tmp_path, delta):
        outs = []
        for name in ("r1.txt", "r2.txt"):
            out = tmp_path / name
            code = run(
                ["communities", "--physical", TOY / "physical.el",
                 "--conceptual", TOY / "conceptual.el", "--delta", delta,
                 "--k", 5, "--seed", 11, "--output", out]
            )
            assert code == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_dcs_byte_identical(self, tmp_path):
        outs = []
        for name in ("r1.txt", "r2.txt"):
            out = tmp_path / name
            run(
                ["dcs", "--physical", TOY / "physical.el",
                 "--conceptual", TOY / "conceptual.el", "--delta", 2,
                 "--output", out]
            )
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
