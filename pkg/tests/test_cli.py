import json
import subprocess
import sys

import pytest

from evencycle.cli import loglog_slope, main, parse_sizes, InputError
from evencycle.generators import named_graphs
from evencycle.graph import save_edge_list


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("graphs")
    out = {}
    for name, g in named_graphs().items():
        path = root / f"{name.lower()}.edges"
        path.write_text(save_edge_list(g))
        out[name] = str(path)
    bad = root / "bad.edges"
    bad.write_text("0 1\n1 1\n")
    out["bad"] = str(bad)
    out["missing"] = str(root / "missing.edges")
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_detect_none_on_c7(capsys, files):
    code, out, _ = run(capsys, "detect", "--k", "3", "--input", files["C7"])
    assert code == 0 and out.splitlines()[0] == "none"


def test_detect_found_on_k4(capsys, files):
    code, out, _ = run(capsys, "detect", "--k", "2", "--input", files["K4"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "found" and len(lines[1].split()) == 4


def test_missing_and_malformed_inputs(capsys, files):
    assert run(capsys, "detect", "--k", "3", "--input", files["missing"])[0] == 2
    assert run(capsys, "list", "--k", "3", "--input", files["bad"])[0] == 2
    assert run(capsys, "list", "--k", "1", "--input", files["K4"])[0] == 2
    assert run(capsys, "list", "--k", "3", "--input", files["K4"], "--epsilon", "abc")[0] == 2


def test_list_counts(capsys, files):
    code, out, _ = run(capsys, "list", "--k", "3", "--input", files["K33"], "--seed", "7")
    assert code == 0 and out.startswith("6 cycles\n")
    code, out, _ = run(capsys, "list", "--k", "2", "--input", files["K4"], "--oracle")
    assert out.startswith("3 cycles\n")
    code, out, _ = run(capsys, "list", "--k", "3", "--input", files["C7"])
    assert out.startswith("0 cycles\n")


def test_list_budget_exit_code(capsys, files):
    assert run(capsys, "list", "--k", "3", "--input", files["Heawood"], "--budget", "10")[0] == 3


def test_json_report_is_deterministic(capsys, files):
    args = ("list", "--k", "3", "--input", files["Petersen"], "--format", "json", "--epsilon", "1/1000")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    doc = json.loads(first)
    assert doc["results"]["t"] == 10
    assert doc["parameters"]["epsilon"] == "1/1000"
    assert doc["input_digest"].startswith("sha256:")
    assert doc["wall_time"] is None
    cycles = doc["results"]["cycles"]
    assert cycles == sorted(cycles)


def test_timing_is_opt_in(capsys, files):
    _, out, _ = run(capsys, "list", "--k", "2", "--input", files["K4"], "--format", "json", "--timing")
    assert json.loads(out)["wall_time"] is not None


def test_csv_list(capsys, files):
    _, out, _ = run(capsys, "list", "--k", "3", "--input", files["K33"], "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "cycle" and len(lines) == 7


def test_bench_single_and_empty(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "256", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["results"]["rows"]) == 1 and doc["results"]["slope"] is None
    assert run(capsys, "bench", "--sizes", "")[0] == 2
    assert run(capsys, "bench", "--sizes", "2^x")[0] == 2
    assert run(capsys, "bench", "--family", "tree")[0] == 2


def test_size_parsing_and_slope():
    assert parse_sizes("2^12, 5000") == [4096, 5000]
    with pytest.raises(InputError):
        parse_sizes(" , ")
    assert loglog_slope([10, 100, 1000], [5, 500, 50000]) == pytest.approx(2.0)
    assert loglog_slope([10, 10], [1, 2]) is None


def test_decompose(capsys, files):
    code, out, _ = run(capsys, "decompose", "--k", "3", "--input", files["Petersen"], "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["first_inequality"] and doc["results"]["second_inequality"]
    assert doc["results"]["regularity_violations"] == []


def test_supersat(capsys):
    code, out, _ = run(capsys, "supersat", "--L", "3", "--R", "3", "--k", "3", "--edge-prob", "1.0", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("3,3,9,3,6,6,2/243,")
    assert run(capsys, "supersat", "--L", "3", "--R", "3")[0] == 2


def test_lp_verify_report(capsys):
    code, out, _ = run(capsys, "lp-verify", "--format", "json", "--no-cross-check")
    doc = json.loads(out)
    assert len(doc["results"]["cases"]) == 36
    assert doc["results"]["all_certified"]
    assert code == (0 if doc["results"]["pass"] else 1)
    for row in doc["results"]["cases"]:
        assert len(row["certificate"]) == 16


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "evencycle", "list", "--k", "2", "--input", files["K4"], "--oracle"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("3 cycles")
