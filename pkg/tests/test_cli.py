"""Command-line interface: every subcommand, JSON stability, exit codes."""

import json

import pytest

from heawood import format_graph, parse_graph
from heawood.cli import main

from conftest import CL3_PAPER


@pytest.fixture
def cl3_file(tmp_path):
    path = tmp_path / "cl3.graph"
    path.write_text(format_graph(CL3_PAPER), encoding="utf-8")
    return str(path)


@pytest.fixture
def broken_file(tmp_path):
    path = tmp_path / "broken.graph"
    path.write_text("vertices 2\n0: 1 1 1\n1: 0 0 0\n", encoding="utf-8")
    return str(path)


class TestValidate:
    def test_human_output(self, cl3_file, capsys):
        assert main(["validate", cl3_file]) == 0
        out = capsys.readouterr().out
        assert "valid: 6 vertices, 9 edges, 5 faces, non-bipartite" in out

    def test_json_output(self, cl3_file, capsys):
        assert main(["validate", cl3_file, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "validate"
        assert payload["valid"] is True
        assert payload["vertices"] == 6
        assert payload["bipartite"] is False

    def test_invalid_graph_exits_one(self, broken_file, capsys):
        assert main(["validate", broken_file]) == 1
        assert "not simple" in capsys.readouterr().out

    def test_missing_file_exits_one(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "nope.graph")]) == 1
        assert "error:" in capsys.readouterr().err


class TestFaces:
    def test_lists_all_faces(self, cl3_file, capsys):
        assert main(["faces", cl3_file]) == 0
        out = capsys.readouterr().out
        assert "5 faces" in out
        assert "(outer hint)" in out

    def test_one_based(self, cl3_file, capsys):
        main(["faces", cl3_file, "--json", "--one-based"])
        payload = json.loads(capsys.readouterr().out)
        cycles = {tuple(f["cycle"]) for f in payload["faces"]}
        assert (1, 2, 3) in cycles  # the rim triangle in figure labels


class TestRank:
    def test_default_drop(self, cl3_file, capsys):
        assert main(["rank", cl3_file]) == 0
        assert "rank 4" in capsys.readouterr().out

    def test_each_drop_choice(self, cl3_file, capsys):
        for face_id in range(5):
            assert main(["rank", cl3_file, "--drop-face", str(face_id), "--json"]) == 0
            payload = json.loads(capsys.readouterr().out)
            assert payload["rank"] == 4
            assert payload["dropped_face"] == face_id


class TestCount:
    def test_both_methods_agree(self, cl3_file, capsys):
        assert main(["count", cl3_file, "--method", "both"]) == 0
        out = capsys.readouterr().out
        assert "heawood: 6" in out
        assert "oracle: 6" in out
        assert "agree" in out

    def test_json(self, cl3_file, capsys):
        main(["count", cl3_file, "--method", "both", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "agree": True,
            "command": "count",
            "heawood": 6,
            "method": "both",
            "oracle": 6,
        }


class TestHeawoodList:
    def test_lists_golden_vectors(self, cl3_file, capsys):
        assert main(["heawood", "list", cl3_file]) == 0
        out = capsys.readouterr().out
        assert "2 Heawood vectors" in out
        assert "+1 +1 +1 -1 -1 -1" in out

    def test_json(self, cl3_file, capsys):
        main(["heawood", "list", cl3_file, "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 2
        assert [1, 1, 1, -1, -1, -1] in payload["vectors"]


class TestTaitList:
    def test_enumerates(self, cl3_file, capsys):
        assert main(["tait", "list", cl3_file]) == 0
        assert "6 colorings" in capsys.readouterr().out

    def test_limit_refusal(self, cl3_file, capsys):
        assert main(["tait", "list", cl3_file, "--limit", "2"]) == 1
        assert "error:" in capsys.readouterr().err


class TestDefining:
    def test_linear_mode(self, cl3_file, capsys):
        assert main(["defining", cl3_file, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["free_variables"] == {"bipartite": False, "members": [4, 5]}
        assert len(payload["minimal_sets"]) == 12

    def test_heawood_mode(self, cl3_file, capsys):
        assert main(["defining", cl3_file, "--mode", "heawood", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["minimal_sets"] == [[v] for v in range(6)]


class TestZebra:
    def test_witness_found(self, cl3_file, capsys):
        assert main(["zebra", cl3_file, "--set", "0,5"]) == 0
        assert "witness found" in capsys.readouterr().out

    def test_no_witness(self, cl3_file, capsys):
        assert main(["zebra", cl3_file, "--set", "0,1"]) == 0
        assert "no witness" in capsys.readouterr().out

    def test_one_based_parsing(self, cl3_file, capsys):
        assert main(["zebra", cl3_file, "--set", "1,6", "--one-based", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["witness"]["support"] == [1, 6]

    def test_bad_set_string(self, cl3_file, capsys):
        assert main(["zebra", cl3_file, "--set", "a,b"]) == 1


class TestGen:
    @pytest.mark.parametrize(
        "argv,vertices",
        [
            (["gen", "cl", "5"], 10),
            (["gen", "mobius", "4"], 8),
            (["gen", "k4"], 4),
            (["gen", "petersen"], 10),
        ],
    )
    def test_emits_parseable_text(self, argv, vertices, capsys):
        assert main(argv) == 0
        g = parse_graph(capsys.readouterr().out)
        assert g.n_vertices == vertices

    def test_missing_size_rejected(self, capsys):
        assert main(["gen", "cl"]) == 1

    def test_spurious_size_rejected(self, capsys):
        assert main(["gen", "k4", "4"]) == 1

    def test_gen_roundtrips_through_count(self, tmp_path, capsys):
        main(["gen", "cl", "4"])
        text = capsys.readouterr().out
        path = tmp_path / "cl4.graph"
        path.write_text(text, encoding="utf-8")
        assert main(["count", str(path), "--method", "both", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["heawood"] == payload["oracle"] == 24


class TestVerify:
    def test_cln_range(self, capsys):
        assert main(["verify-cln", "--from", "3", "--to", "8", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["all_ok"] is True
        by_n = {row["n"]: row for row in payload["rows"]}
        assert by_n[3]["oracle"] == 6
        assert by_n[8]["oracle"] is None  # oracle only runs for small cases
        assert by_n[8]["heawood"] == by_n[8]["formula"] == 2**8 + 8

    def test_mobius_range(self, capsys):
        assert main(["verify-mobius", "--from", "3", "--to", "6", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["all_ok"] is True
        assert [row["oracle"] for row in payload["rows"]] == [12, 18, 36, 66]

    def test_human_table(self, capsys):
        assert main(["verify-cln", "--from", "3", "--to", "4"]) == 0
        out = capsys.readouterr().out
        assert "all match" in out


class TestDeterminism:
    def test_identical_runs_identical_bytes(self, cl3_file, capsys):
        main(["defining", cl3_file, "--json"])
        first = capsys.readouterr().out
        main(["defining", cl3_file, "--json"])
        second = capsys.readouterr().out
        assert first == second

    def test_human_output_stable(self, cl3_file, capsys):
        main(["heawood", "list", cl3_file])
        first = capsys.readouterr().out
        main(["heawood", "list", cl3_file])
        second = capsys.readouterr().out
        assert first == second


class TestUsageErrors:
    def test_unknown_subcommand_exits_two(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_required_argument_exits_two(self, capsys):
        assert main(["zebra"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
