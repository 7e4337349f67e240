import io
import json
import subprocess
import sys

import pytest

from shufflepeak.cli import run


def call(*argv):
    buf = io.BytesIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_enumerate_signed_peak():
    code, out = call("enumerate", "--vpath", "NS", "--hpath", "EE", "--stat", "signed-peak")
    assert code == 0
    assert json.loads(out) == {"0": "3", "-1": "3"}


def test_enumerate_csv():
    code, out = call("enumerate", "--vpath", "NS", "--hpath", "EE", "--stat", "signed-peak", "--format", "csv")
    assert out == b"value,count\n-1,3\n0,3\n"


def test_enumerate_quarter_class_and_loops():
    code, out = call("enumerate", "--vpath", "NS", "--class", "1,1,1,1")
    assert code == 0 and json.loads(out) == {"0": "4", "1": "2"}
    code, out = call("enumerate", "--loops", "4")
    assert code == 0 and sum(int(v) for v in json.loads(out).values()) == 10


def test_gf_closed_form():
    code, out = call("gf", "--class", "1,1,1,1", "--stat", "abs-signed-peak")
    rec = json.loads(out)
    assert code == 0
    assert rec["coeffs"] == ["4", "2"] and rec["shifted"] == ["2", "2"] and rec["positive"] is True


def test_gf_over_walk_set():
    code, out = call("gf", "--vpath", "NS", "--hpath", "EW")
    assert code == 0 and json.loads(out)["coeffs"] == ["4", "2"]


def test_bijection_ops():
    assert json.loads(call("bijection", "flip", "--word", "EENWSNEWWN")[1])["output"] == "NEEWSENWWN"
    assert json.loads(call("bijection", "toggle", "--word", "110110", "--index", "1")[1])["output"] == "111010"
    rec = json.loads(call("bijection", "toggle-class", "--word", "110110")[1])
    assert rec["size"] == "4" and sorted(rec["members"]) == ["110101", "110110", "111001", "111010"]
    rec = json.loads(call("bijection", "coloring", "--word", "ENES")[1])
    assert rec["blue_horizontal"] == ["0", "1"] and rec["decoded"] == "ENES"
    rec = json.loads(call("bijection", "word-to-shuffle", "--word", "1100", "--vpath", "NS", "--hpath", "EW")[1])
    back = json.loads(call("bijection", "shuffle-to-word", "--word", rec["shuffle"])[1])
    assert back["output"] == "1100"
    assert rec["signed_peak"] == rec["shifted_even_count"]


def test_verify_exit_codes():
    code, out = call("verify", "thmmain", "--max", "2")
    assert code == 0 and all(r["verdict"] == "confirmed" for r in json.loads(out))
    code, out = call("verify", "lemevencount", "--max", "1")
    assert code == 2 and any(r["verdict"] == "discrepancy-with-paper" for r in json.loads(out))
    code, out = call("verify", "buildprobe", "--max", "1")
    assert code == 2


def test_scan_exit_codes_and_counterexample_witness(tmp_path):
    code, out = call("scan", "conjmain", "--max", "2")
    assert code == 0
    out_file = tmp_path / "report.json"
    code, _ = call("scan", "p2", "--max", "1", "--out", str(out_file))
    assert code == 0 and json.loads(out_file.read_bytes())


def test_scan_parallel_output_identical():
    a = call("scan", "all", "--max", "2", "--max-len", "6")
    b = call("scan", "all", "--max", "2", "--max-len", "6", "--jobs", "3")
    assert a == b and a[0] == 0


def test_timing_only_on_request():
    _, out = call("verify", "propscale", "--max", "1")
    assert b"runtime_ms" not in out
    _, out = call("verify", "propscale", "--max", "1", "--timing")
    assert b"runtime_ms" in out


def test_no_floats_in_output():
    _, out = call("scan", "all", "--max", "1", "--max-len", "4", "--timing")

    def walk(x):
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert x is None or isinstance(x, (str, bool))

    walk(json.loads(out))


@pytest.mark.parametrize("argv", [
    ["enumerate", "--vpath", "NX", "--hpath", "EE"],
    ["enumerate", "--vpath", "NE", "--hpath", "EE"],
    ["enumerate", "--loops", "5"],
    ["enumerate", "--vpath", "NS"],
    ["enumerate", "--vpath", "SN", "--class", "1,1,1,1"],
    ["gf", "--class", "1,1,1", "--stat", "abs-signed-peak"],
    ["gf", "--class", "1,1,1,-1", "--stat", "abs-signed-peak"],
    ["bijection", "toggle", "--word", "1100", "--index", "7"],
    ["bijection", "toggle", "--word", "12"],
    ["scan", "conjmain", "--jobs", "0"],
    ["scan", "conjmain", "--max", "-1"],
    ["scan", "nonsense"],
    ["frobnicate"],
    ["enumerate", "--bogus"],
    [],
])
def test_usage_errors_exit_1(argv, capsys):
    code, out = call(*argv)
    assert code == 1
    assert out == b""


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shufflepeak", "enumerate", "--vpath", "NS", "--hpath", "EE",
                           "--format", "csv"], capture_output=True)
    assert proc.returncode == 0 and proc.stdout == b"value,count\n0,3\n1,3\n"
