from __future__ import annotations

import json
from pathlib import Path

import pytest

from aca.cli import main
from aca.harness.registry import resolve_dataset
from aca.synth.bundle import read_attribute_bits, read_labels_csv


def run_cli(*argv) -> int:
    return main([str(a) for a in argv])


def test_generate_bundle(tmp_path, capsys):
    out = tmp_path / "gen"
    code = run_cli("generate", "--model", "er", "--n", "300", "--avg-degree", "8",
                   "--seed", "7", "--out-dir", out, "--delta-frac", "0.6")
    assert code == 0
    meta = json.loads((out / "meta.json").read_text())
    assert meta["model"] == "er"
    assert meta["achieved_delta"] <= meta["initial_delta"]
    assert (out / "graph.edges").exists()
    labels = read_labels_csv(out / "labels.csv")
    assert set(labels.tolist()) == {0, 1}
    assert (out / "manifest.json").exists()
    text = capsys.readouterr().out
    assert "heterophilicity" in text


def test_generate_with_attributes(tmp_path):
    out = tmp_path / "gen_attrs"
    code = run_cli("generate", "--model", "ws", "--n", "120", "--avg-degree", "6",
                   "--seed", "3", "--out-dir", out, "--attr-accuracy", "0.7")
    assert code == 0
    meta = json.loads((out / "meta.json").read_text())
    assert abs(meta["attr_glrt_accuracy"] - 0.7) <= 0.05
    attrs = read_attribute_bits(out / "attrs.bin")
    n = meta["lcc_nodes"]
    assert attrs.shape == (n, 100 + n)


def test_generate_ws_beta_zero_low_heterophilicity(tmp_path):
    out = tmp_path / "gen_ws"
    code = run_cli("generate", "--model", "ws", "--n", "200", "--avg-degree", "6",
                   "--seed", "5", "--out-dir", out, "--beta", "0")
    assert code == 0
    meta = json.loads((out / "meta.json").read_text())
    assert meta["heterophilicity"] < 1.0  # contiguous ring bisection


def test_generate_usage_error():
    assert run_cli("generate", "--model", "er", "--n", "3",
                   "--out-dir", "/tmp/x") == 2  # n too small


def test_generate_missing_required(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli("generate", "--model", "er", "--out-dir", "/tmp/x")
    assert exc.value.code == 2


def _small_game(tmp_path, name="game1", seed=5):
    out = tmp_path / name
    code = run_cli("game", "--data", "mini", "--budget", "5", "--targets", "3",
                   "--seed", seed, "--detectors", "louvain,hlc",
                   "--attacks", "cl,ss", "--out-dir", out,
                   "--attack-prob-grid", "0,0.5,1")
    assert code == 0
    return out


def test_game_outputs_and_grid(tmp_path):
    out = _small_game(tmp_path)
    record = json.loads((out / "record.json").read_text())
    assert set(record["detector_mean_rank"]) == {"louvain", "hlc"}
    curves = (out / "curves.csv").read_text().splitlines()
    assert curves[0] == "# schema: aca-curves-v1"
    assert curves[1] == "dataset,detector,attack,target,prefix_size,rank,t_comm"
    rows = curves[2:]
    expected = sum(
        len(o["ranks"])
        for c in record["cells"] for o in c["outcomes"].values())
    assert len(rows) == expected
    # prefix rows per (detector, attack, target) = plan length + 1 <= 6
    assert (out / "tradeoff.csv").exists()
    specs = list((out / "report_specs").glob("*.spec.json"))
    assert len(specs) == 4


def test_game_rerun_byte_identical(tmp_path):
    a = _small_game(tmp_path, "a")
    b = _small_game(tmp_path, "b")
    assert (a / "curves.csv").read_bytes() == (b / "curves.csv").read_bytes()
    assert (a / "record.json").read_bytes() == (b / "record.json").read_bytes()
    assert (a / "tradeoff.csv").read_bytes() == (b / "tradeoff.csv").read_bytes()


def test_replay_pass_and_tamper(tmp_path, capsys):
    out = _small_game(tmp_path, "replayable")
    assert run_cli("replay", out) == 0
    assert "checks passed" in capsys.readouterr().out
    record = json.loads((out / "record.json").read_text())
    record["cells"][0]["outcomes"]["cl"]["ranks"][0] += 1
    (out / "record.json").write_text(json.dumps(record))
    assert run_cli("replay", out) == 4
    assert "MISMATCH" in capsys.readouterr().out


def test_replay_missing_files(tmp_path):
    assert run_cli("replay", tmp_path / "nope") == 3


def test_game_unknown_detector(tmp_path):
    code = run_cli("game", "--data", "mini", "--detectors", "bogus",
                   "--out-dir", tmp_path / "x")
    assert code == 2


def test_game_unknown_dataset(tmp_path):
    code = run_cli("game", "--data", "missingville", "--out-dir", tmp_path / "x")
    assert code == 3


def test_game_ss_nbr_capability_budget(tmp_path):
    out = tmp_path / "nbr"
    code = run_cli("game", "--data", "mini", "--targets", "2", "--seed", "2",
                   "--detectors", "louvain", "--attacks", "cl",
                   "--capability", "ss-nbr", "--out-dir", out)
    assert code == 0
    record = json.loads((out / "record.json").read_text())
    assert record["budget"] == 51
    assert "ss-nbr" in record["strategies"]
    curves = (out / "curves.csv").read_text()
    assert ",ss-nbr," in curves


def test_convert_gml(tmp_path):
    gml = tmp_path / "toy.gml"
    gml.write_text("""
    graph [
      node [ id 1 value 7 ]
      node [ id 2 value 8 ]
      edge [ source 1 target 2 ]
    ]
    """)
    edges_out = tmp_path / "toy.edges"
    labels_out = tmp_path / "toy_labels.csv"
    assert run_cli("convert-gml", gml, edges_out, "--labels-out", labels_out) == 0
    assert edges_out.read_text() == "0 1\n"
    assert labels_out.read_text() == "node,label\n0,7\n1,8\n"


def test_fixture_datasets_resolve():
    ds = resolve_dataset("football-like")
    assert ds.graph.n == 115
    assert ds.labels is not None and len(set(ds.labels.tolist())) == 12
    mini = resolve_dataset("mini")
    assert mini.graph.n == 40
