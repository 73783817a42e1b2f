"""End-to-end tests of the command line."""

import json

import pandas as pd
import pytest

from local_cde_discovery.graphs.io import read_dag, write_dag
from local_cde_discovery.main import main
from tests.test_config import ENV_VARS


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (*ENV_VARS, "LOCAL_CDE_LOG_FILE"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def boundary_file(tmp_path, boundary_dag):
    path = tmp_path / "boundary.dag"
    write_dag(path, boundary_dag)
    return path


class TestOracleLeg:
    def test_prints_leg(self, boundary_file, capsys):
        assert main(["oracle-leg", "--dag", str(boundary_file), "--target", "1"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "leg 9 target=1 hop=1"
        assert "0 -- 1" in out.splitlines()

    @pytest.mark.parametrize(
        "hop, candidate, verdict",
        [("3", "0,1,2", "true"), ("1", "0,1,2,3", "false")],
    )
    def test_check_noc(self, boundary_file, capsys, hop, candidate, verdict):
        argv = ["oracle-leg", "--dag", str(boundary_file), "--target", "1"]
        assert main(argv + ["--hop", hop, "--check-noc"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[-2] == f"noc_candidate: {candidate}"
        assert lines[-1] == f"noc_satisfied: {verdict}"

    def test_missing_file(self, tmp_path):
        argv = ["oracle-leg", "--dag", str(tmp_path / "absent.dag"), "--target", "0"]
        assert main(argv) == 1

    def test_unknown_target(self, boundary_file):
        argv = ["oracle-leg", "--dag", str(boundary_file), "--target", "Q"]
        assert main(argv) == 1


class TestGenerateAndDiscover:
    def test_round(self, tmp_path, capsys):
        dag, data, meta = (tmp_path / name for name in ("g.dag", "d.csv", "m.json"))
        argv = (
            "generate --n-vars 6 --identifiable --samples 2000 --seed 4 "
            f"--out-dag {dag} --out-data {data} --out-meta {meta}"
        ).split()
        assert main(argv) == 0
        g = read_dag(dag)
        info = json.loads(meta.read_text())
        assert info["identifiable"] is True
        assert g.node(info["treatment"]) in g.parents(g.node(info["target"]))
        assert pd.read_csv(data).shape == (2000, 6)
        capsys.readouterr()

        audit = tmp_path / "audit.txt"
        argv = (
            f"discover --data {data} --target {info['target']} "
            f"--treatment {info['treatment']} --audit {audit}"
        ).split()
        assert main(argv) == 0
        out = capsys.readouterr().out
        report, end = json.JSONDecoder().raw_decode(out)
        assert report["target"] == info["target"]
        assert len(report["ci_history"]) == report["hops_used"] + 1
        assert out[end:].strip().startswith("leg 6 target=")
        assert len(audit.read_text().splitlines()) == report["ci_count"]

    def test_requires_identifiability_choice(self, tmp_path):
        argv = ["generate", "--out-dag", "a", "--out-data", "b", "--out-meta", "c"]
        with pytest.raises(SystemExit):
            main(argv)

    def test_missing_column(self, tmp_path):
        data = tmp_path / "d.csv"
        data.write_text("a,b\n0.1,0.2\n0.3,0.1\n")
        argv = ["discover", "--data", str(data), "--target", "a", "--treatment", "c"]
        assert main(argv) == 1


class TestBenchAndSummarize:
    def test_oracle_sweep(self, tmp_path, capsys):
        results = tmp_path / "results.csv"
        argv = (
            "bench --oracle --no-timing --sizes 5,6 --reps 2 --workers 1 "
            f"--seed 3 --out {results}"
        ).split()
        assert main(argv) == 0
        frame = pd.read_csv(results)
        assert len(frame) == 8
        assert set(frame["wall_ms"]) == {0.0}

        summary = tmp_path / "summary.csv"
        assert main(["summarize", "--in", str(results), "--out", str(summary)]) == 0
        rows = json.loads(summary.with_suffix(".json").read_text())["rows"]
        assert [(r["n_vars"], r["algorithm"]) for r in rows] == [
            (5, "locpc_cde"),
            (5, "pc"),
            (6, "locpc_cde"),
            (6, "pc"),
        ]
        assert "Wrote 4 summary rows" in capsys.readouterr().out

    def test_summarize_foreign_csv(self, tmp_path):
        path = tmp_path / "other.csv"
        path.write_text("a,b\n1,2\n")
        argv = ["summarize", "--in", str(path), "--out", str(tmp_path / "s.csv")]
        assert main(argv) == 1
