from __future__ import annotations

import json


from satforge import h_core, to_graph6
from satforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_summary_line(capsys):
    code, out, _ = run(capsys, "construct", "--family", "h", "--t", "4", "--n", "14")
    assert code == 0
    assert "triangles=24 delta=4 saturated=K4" in out


def test_construct_appendix_summary(capsys):
    code, out, _ = run(capsys, "construct", "--family", "appendix", "--id", "G11")
    assert code == 0
    assert "triangles=22" in out


def test_construct_rejects_bad_params(capsys):
    code, _, err = run(capsys, "construct", "--family", "h", "--t", "4", "--n", "8")
    assert code == 2
    assert "n > 2t" in err
    code, _, err = run(capsys, "construct", "--family", "h", "--t", "4")
    assert code == 2


def test_construct_writes_files_and_rerun(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code, _, _ = run(
        capsys, "construct", "--family", "ehm", "--s", "4", "--n", "10",
        "--out", str(out_dir),
    )
    assert code == 0
    g6 = out_dir / "ehm_s4_n10.g6"
    labels = json.loads((out_dir / "ehm_s4_n10.labels.json").read_text())
    manifest = json.loads((out_dir / "ehm_s4_n10.manifest.json").read_text())
    assert g6.exists()
    assert labels["clique"] == [0, 1]
    assert set(manifest["outputs"]) == {"ehm_s4_n10.g6", "ehm_s4_n10.labels.json"}

    replay = tmp_path / "replay"
    code, out, _ = run(
        capsys, "rerun", "--manifest", str(out_dir / "ehm_s4_n10.manifest.json"),
        "--out", str(replay),
    )
    assert code == 0 and "byte-identical" in out
    assert (replay / "ehm_s4_n10.g6").read_bytes() == g6.read_bytes()


def test_verify_and_count(tmp_path, capsys):
    path = tmp_path / "core.g6"
    path.write_bytes(to_graph6(h_core()) + b"\n")
    code, out, _ = run(capsys, "verify", "--in", str(path), "--s", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 8 and payload["k3"] == 12 and payload["saturated"] is True
    code, out, _ = run(capsys, "count", "--in", str(path), "--r", "3")
    assert code == 0 and out.strip() == "12"


def test_verify_support_cli(tmp_path, capsys):
    graph_path = tmp_path / "core.g6"
    graph_path.write_bytes(to_graph6(h_core()) + b"\n")
    sides = tmp_path / "sides.json"
    sides.write_text(json.dumps({"A": [0, 1, 2, 3], "B": [4, 5, 6, 7], "s": 4}))
    code, out, _ = run(
        capsys, "verify-support", "--in", str(graph_path), "--sides", str(sides)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pre_support"]["ok"] is True
    assert payload["support"]["ok"] is True


def test_partition_and_rules_cli(tmp_path, capsys):
    out_dir = tmp_path / "h"
    run(capsys, "construct", "--family", "h", "--t", "4", "--n", "14",
        "--out", str(out_dir))
    g6 = out_dir / "h_t4_n14.g6"
    code, out, _ = run(capsys, "partition", "--in", str(g6), "--x", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["cells"]["1234"] == [9, 10, 11, 12, 13]
    assert payload["nx_edges"] == ["12", "34"]
    code, out, _ = run(capsys, "rules-check", "--in", str(g6))
    assert code == 0
    report = json.loads(out)["base_vertices"]
    assert all(entry["violations"] == [] for entry in report.values())
    code, _, err = run(capsys, "partition", "--in", str(g6), "--x", "0")
    assert code == 2 and "degree" in err


def test_classify_cli(tmp_path, capsys):
    out_dir = tmp_path / "w"
    run(capsys, "construct", "--family", "w", "--s", "4",
        "--m1", "2", "--m3", "1", "--m4", "2", "--out", str(out_dir))
    code, out, _ = run(
        capsys, "classify", "--in", str(out_dir / "w_s4_2_1_2.g6"), "--s", "4"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "w" and payload["m"] == [2, 1, 2]


def test_bound_cli(capsys):
    code, out, _ = run(capsys, "bound", "--name", "thm2", "--n", "14", "--t", "4")
    assert code == 0 and out.strip() == "24"
    code, _, err = run(capsys, "bound", "--name", "thm2", "--n", "7", "--t", "4")
    assert code == 2
    code, out, _ = run(capsys, "bounds")
    assert code == 0 and "thm2" in out


def test_search_cli(capsys):
    code, out, _ = run(capsys, "search", "--n", "7", "--r", "3", "--s", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["minimum"] == 5 and payload["exhaustive"] is True
    assert len(payload["extremal"]) == 1


def test_search_cli_sharded(capsys, monkeypatch):
    monkeypatch.setenv("SATFORGE_THREADS", "2")
    code, out, _ = run(capsys, "search", "--n", "7", "--r", "3", "--s", "4",
                       "--shards", "3")
    assert code == 0
    assert json.loads(out)["minimum"] == 5


def test_search_cli_single_shard_slice(capsys):
    minima = []
    for sid in range(3):
        code, out, _ = run(capsys, "search", "--n", "7", "--r", "3", "--s", "4",
                           "--shards", "3", "--shard-id", str(sid))
        assert code == 0
        value = json.loads(out)["minimum"]
        if isinstance(value, int):
            minima.append(value)
    assert min(minima) == 5  # the slices jointly recover the optimum


def test_search_cli_infeasible(capsys):
    code, out, _ = run(capsys, "search", "--n", "6", "--r", "3", "--s", "4",
                       "--t", "5")
    assert code == 0
    assert json.loads(out)["minimum"] == "infeasible"


def test_reproduce_pass_and_unknown(capsys):
    code, out, _ = run(capsys, "reproduce", "--claim", "appendix-counts")
    assert code == 0
    assert "PASS appendix-counts: 12/12 inventories" in out
    code, _, err = run(capsys, "reproduce", "--claim", "nope")
    assert code == 2 and "unknown claim" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "--in", "/nonexistent.g6", "--r", "3")
    assert code == 2
