"""CLI: subcommands, exit codes, deterministic output, file round-trips."""

import json
import subprocess
import sys

from nielsen.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_explore_n1(capsys):
    code, out, _ = run_cli(
        capsys, "explore", "--group", '{"kind":"Integers"}', "--n", "1",
        "--root", "[1]", "--radius", "3",
    )
    assert code == 0
    report = json.loads(out)
    assert report["vertices"] == 2 and report["expanded"] == 2
    assert report["tool"] == "nielsen 0.1.0"


def test_stdout_is_byte_identical(capsys):
    args = ("explore", "--group", '{"kind":"Integers"}', "--root", "[2,3]", "--radius", "4")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    # worker count must not change the output
    _, out3, _ = run_cli(capsys, "--workers", "4", *args)
    assert out1 == out3


def test_components_cli(capsys):
    code, out, _ = run_cli(
        capsys, "components", "--group", '{"kind":"FiniteAbelianExp","m":3,"d":2}', "--n", "2",
    )
    assert code == 0
    report = json.loads(out)
    assert report["components"] == 1 and report["sizes"] == [48]


def test_euclid_cli(capsys):
    code, out, _ = run_cli(capsys, "euclid", "--root", "[6,10,15]")
    assert code == 0
    report = json.loads(out)
    assert report["verified"] is True and report["result"] == [1, 0, 0]


def test_spectral_k0_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "spectral", "--group", '{"kind":"Integers"}', "--root", "[1,1]", "--k", "0",
    )
    assert code == 2
    assert "k >= 1" in err


def test_bad_group_json_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "explore", "--group", '{"kind":"Wat"}', "--root", "[1]", "--radius", "1",
    )
    assert code == 2 and "unknown group kind" in err


def test_cap_exceeded_is_resource_error(capsys):
    code, _, err = run_cli(
        capsys, "explore", "--group", '{"kind":"Integers"}', "--root", "[1,1]",
        "--radius", "6", "--cap", "10",
    )
    assert code == 3 and "cap" in err


def test_non_generating_root_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "explore", "--group", '{"kind":"Integers"}', "--root", "[2,4]", "--radius", "2",
    )
    assert code == 2 and "generate" in err


def test_growth_cli(capsys):
    code, out, _ = run_cli(
        capsys, "growth", "--group", '{"kind":"InfiniteDihedral"}',
        "--root", "[[0,1],[1,1]]", "--radius", "6",
    )
    assert code == 0
    profile = json.loads(out)["profile"]
    assert profile[0] == [0, 1] and len(profile) == 7


def test_cheeger_cli(capsys):
    code, out, _ = run_cli(
        capsys, "cheeger", "--group", '{"kind":"Integers"}', "--root", "[1,1]",
        "--radius", "5", "--strategy", "balls",
    )
    assert code == 0
    report = json.loads(out)
    assert report["ratio_num"] * 5 >= report["ratio_den"]  # >= 1/5


def test_forest_cli(capsys):
    code, out, _ = run_cli(capsys, "forest", "--n", "2", "--window", "8")
    assert code == 0
    report = json.loads(out)
    assert report["acyclic"] and report["coverage_ok"] and report["min_interior_degree"] >= 3


def test_forest_component_export(capsys, tmp_path):
    path = tmp_path / "comp.dot"
    code, out, _ = run_cli(
        capsys, "forest", "--n", "2", "--window", "6", "--pattern", "+-", "--output", str(path),
    )
    assert code == 0
    text = path.read_text()
    assert text.startswith("graph forest_component {") and "peripheries=2" in text


def test_export_round_trip(capsys, tmp_path):
    path = tmp_path / "frag.jsonl"
    code, _, _ = run_cli(
        capsys, "export", "--group", '{"kind":"Integers"}', "--root", "[1,1]",
        "--radius", "3", "--format", "jsonl", "--output", str(path),
    )
    assert code == 0
    from nielsen.explore import ball, fragment_from_jsonl
    from nielsen.groups import Integers

    clone = fragment_from_jsonl(Integers(), 2, path.read_text())
    assert clone.content_equal(ball(Integers(), (1, 1), 3))


def test_cover_cli_with_fragment(capsys, tmp_path):
    path = tmp_path / "codomain.jsonl"
    run_cli(
        capsys, "export", "--group", '{"kind":"Integers"}', "--root", "[1,1]",
        "--radius", "4", "--format", "jsonl", "--output", str(path),
    )
    code, out, _ = run_cli(
        capsys, "cover", "--pi", '{"rule":"project","domain":{"kind":"FreeAbelian","d":2},"e":1}',
        "--n", "2", "--samples", "100", "--fragment", str(path),
    )
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == 0
    assert report["lifted"] == report["lifted"] and report["unreached"] == 0


def test_tame_cli(capsys):
    code, out, _ = run_cli(
        capsys, "tame", "--group", '{"kind":"FiniteAbelianExp","m":5,"d":1}', "--d", "1",
    )
    assert code == 0
    report = json.loads(out)
    assert report["num_components"] == 2 and report["ok"] is True


def test_console_entry_point_runs():
    out = subprocess.run(
        [sys.executable, "-m", "nielsen.cli", "euclid", "--root", "[2,3]"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["verified"] is True
