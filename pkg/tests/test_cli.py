import json
import subprocess
import sys
from pathlib import Path

import pytest

from lozenge.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, count", [
    (["--U", "[1,3,6,8]", "--method", "formula"], "175"),
    (["--U", "[4]"], "1"),
    (["--U", "[1,3]", "--L", "[2,3]"], "2"),
])
def test_count(capsys, argv, count):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0
    assert json.loads(out)["count"] == count


def test_count_methods_agree(capsys):
    for u, l in [("[1,3,6,8]", None), ("[1,3]", "[2,3]"), ("[2,5]", "[1,2,4]")]:
        seen = set()
        for method in ("formula", "recursion", "oracle"):
            argv = ["count", "--U", u, "--method", method] + (["--L", l] if l else [])
            code, out, _ = run(capsys, *argv)
            report = json.loads(out)
            assert code == 0 and report["method"] == method
            seen.add(report["count"])
        assert len(seen) == 1


def test_count_report_shape(capsys):
    _, out, _ = run(capsys, "count", "--U", "[1,3]")
    assert json.loads(out) == {"U": [1, 3], "L": None, "count": "2", "method": "formula"}


def test_bad_input_exit_code(capsys):
    for bad in ("[1,1]", "not json", "[0]", "[]", "{}"):
        code, _, err = run(capsys, "count", "--U", bad)
        assert code == 2 and err


def test_oracle_guard_exit_code(capsys):
    code, _, err = run(capsys, "count", "--U", "[1,5]", "--L", "[2,5]", "--method", "oracle",
                       "--max-cells", "10")
    assert code == 3 and "max-cells" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--U", "[2,6]")
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [
        [[2], [2, 6]], [[3], [2, 6]], [[4], [2, 6]], [[5], [2, 6]]]
    assert run(capsys, "enumerate", "--U", "[5]")[1] == "[[5]]\n"
    lines = run(capsys, "enumerate", "--U", "[1,3,6,8]", "--limit", "3")[1].splitlines()
    assert len(lines) == 3 and lines[0] == "[[1],[1,3],[1,3,6],[1,3,6,8]]"


def test_verify_spec(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"U": [1, 2, 4, 5, 8, 10, 11, 14], "L": [1, 4, 9, 10, 11, 12, 14],
                                "V": [4, 11], "B": [3, 6], "shuffles": [[], [2, 9, 12], [5]]}))
    code, out, _ = run(capsys, "verify", "--spec", str(spec))
    checks = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {c["check"] for c in checks} == {"shuffle ratio", "restricted sum invariant",
                                            "restricted formula = oracle"}
    assert all(c["pass"] for c in checks)


def test_verify_trivial_shuffle(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"U": [1, 3], "L": [2, 3], "S": []}))
    assert run(capsys, "verify", "--spec", str(spec))[0] == 0


def test_verify_bad_spec(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"U": [1, 2], "L": [1, 3], "V": [2]}))
    assert run(capsys, "verify", "--spec", str(spec))[0] == 2
    assert run(capsys, "verify", "--spec", str(tmp_path / "missing.json"))[0] == 4


def test_verify_failure_exit_code(capsys, tmp_path, monkeypatch):
    import lozenge.verify as verify
    monkeypatch.setattr(verify, "count_restricted", lambda spec: -1)
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"U": [1, 2], "L": [1, 3], "V": [1], "B": [1, 4]}))
    code, out, _ = run(capsys, "verify", "--spec", str(spec))
    report = json.loads(out.splitlines()[-1])
    assert code == 1 and report["failures"][0]["formula"] == "-1"
    assert report["failures"][0]["oracle"] == "4"


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--sweep", "4", "--random", "50")
    checks = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(checks) >= 7 and all(c["pass"] for c in checks)


def test_render_patterns_matches_golden(tmp_path):
    for name, golden in (("hexagon_patterns.json", "hexagon.svg"),
                         ("dented_patterns.json", "dented_hexagon.svg")):
        out = tmp_path / golden
        assert main(["render", "--patterns", str(DATA / name), "--out", str(out)]) == 0
        assert out.read_bytes() == (GOLDEN / golden).read_bytes()


def test_render_region(tmp_path):
    region = tmp_path / "region.json"
    region.write_text(json.dumps({"m": 1, "n": 0, "N": 1, "U": [], "L": []}))
    out = tmp_path / "cell.svg"
    assert main(["render", "--region", str(region), "--out", str(out), "--no-show-diagonal"]) == 0
    assert out.read_text().count("<polygon") == 1


def test_render_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    out = tmp_path / "x.svg"
    assert main(["render", "--region", str(bad), "--out", str(out)]) == 2
    assert main(["render", "--region", str(tmp_path / "none.json"), "--out", str(out)]) == 4
    assert main(["render", "--patterns", str(DATA / "hexagon_patterns.json"),
                 "--out", str(tmp_path / "no" / "dir.svg")]) == 4
    assert main(["render", "--patterns", str(DATA / "hexagon_patterns.json"), "--out", str(out),
                 "--palette", "red"]) == 2


def test_module_entry_point_is_deterministic(tmp_path):
    outs = []
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "lozenge", "count", "--U", "[1,3,6,8]",
                               "--L", "[1,3,6,8]"], capture_output=True, text=True, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["count"] == "30625"
