import json
from io import StringIO

import pytest

from rainbowindex.domain.services import graph_families
from rainbowindex.infrastructure.external.graph6_codec import to_graph6
from rainbowindex.main import main
from rainbowindex.presentation.cli.cli_commands import (
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
)


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, json.loads(out.getvalue())


class TestRx:
    def test_triangle(self):
        code, payload = run("rx", "--g6", "Bw")
        assert code == EXIT_OK
        assert payload["value"] == 2
        assert payload["status"] == "SOLVED"
        assert len(payload["coloring"]["colors"]) == 3

    def test_budget(self):
        code, payload = run("rx", "--g6", to_graph6(graph_families.cycle(6)), "--budget", "1")
        assert code == EXIT_BUDGET
        assert payload["value"] is None
        assert (payload["lower"], payload["upper"]) == (4, 5)

    def test_missing_graph(self):
        with pytest.raises(SystemExit) as exc:
            main(["rx"])
        assert exc.value.code == EXIT_USAGE

    def test_bad_graph6(self):
        code, payload = run("rx", "--g6", "D?")
        assert code == EXIT_USAGE
        assert payload["error"]["error_type"]


class TestClassifyAndColor:
    def test_classify(self):
        code, payload = run("classify", "--g6", to_graph6(graph_families.complete(5)))
        assert code == EXIT_OK
        assert (payload["bucket"], payload["value"]) == ("EXACT", 2)

    def test_color_then_verify(self, tmp_path):
        g6 = to_graph6(graph_families.cycle(5))
        target = tmp_path / "c5.json"
        code, payload = run("color", "--g6", g6, "--mode", "optimal", "--out", str(target))
        assert code == EXIT_OK
        assert payload["color_count"] == 3

        code, payload = run("verify", "--g6", g6, "--coloring", str(target))
        assert code == EXIT_OK
        assert payload["ok"] is True

    def test_verify_rejects_bad_coloring(self, tmp_path):
        target = tmp_path / "mono.json"
        target.write_text(json.dumps({"graph6": "Bw", "q": 1, "colors": [1, 1, 1]}))
        code, payload = run("verify", "--g6", "Bw", "--coloring", str(target))
        assert code == EXIT_MISMATCH
        assert payload["failing_set"] == [0, 1, 2]

    def test_verify_other_graph(self, tmp_path):
        target = tmp_path / "mono.json"
        target.write_text(json.dumps({"graph6": "Bw", "q": 1, "colors": [1, 1, 1]}))
        code, _ = run("verify", "--g6", to_graph6(graph_families.path(3)), "--coloring", str(target))
        assert code == EXIT_MISMATCH

    def test_partition_on_triangle(self):
        code, payload = run("color", "--g6", "Bw", "--mode", "partition")
        assert code == EXIT_USAGE
        assert "error" in payload


class TestSteiner:
    def test_cycle4(self):
        code, payload = run("steiner", "--g6", to_graph6(graph_families.cycle(4)), "--set", "0,1,2")
        assert code == EXIT_OK
        assert payload["distance"] == 2
        assert payload["minimal_trees"] == 1
        assert payload["tree"] == [[0, 1], [1, 2]]


class TestHarness:
    def test_sweep(self, tmp_path):
        target = tmp_path / "sweep.csv"
        code, payload = run("sweep", "--n", "4", "--full", "--out", str(target))
        assert code == EXIT_OK
        assert payload["summary"]["graphs"] == 10
        assert target.exists()

    def test_sweep_range(self, tmp_path):
        code, _ = run("sweep", "--n", "9", "--full", "--out", str(tmp_path / "sweep.csv"))
        assert code == EXIT_USAGE

    def test_extremal(self, tmp_path):
        target = tmp_path / "extremal.json"
        code, payload = run("extremal", "--n", "4", "--out", str(target))
        assert code == EXIT_OK
        assert len(payload["members"]) == 3
        assert json.loads(target.read_text())["n"] == 4

    def test_catalog_export(self, tmp_path):
        code, payload = run("catalog", "--export", str(tmp_path / "catalog"))
        assert code == EXIT_OK
        assert len(payload["entries"]) == 18
        assert (tmp_path / "catalog" / "catalog.json").exists()
