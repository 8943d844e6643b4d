import json
import subprocess
import sys

import pytest

from eulerian_ops.cli import main
from eulerian_ops.polycore import Poly, poly_from_json


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_eulerian_text(capsys):
    code, out, _ = run(capsys, "eulerian", "5")
    assert code == 0 and out.strip() == "0,1,26,66,26,1"


def test_eulerian_json_roundtrip(capsys):
    code, obj = run_json(capsys, "eulerian", "3")
    assert code == 0
    assert poly_from_json(obj["polynomial"]) == Poly([0, 1, 4, 1])


def test_family_commands(capsys):
    assert run(capsys, "derangement", "4")[1].strip() == "0,1,7,1"
    assert run(capsys, "binomial", "3")[1].strip() == "1,7,7,1"
    assert run(capsys, "binomial", "1", "--r", "2")[1].strip() == "1,2"


def test_series_poly_counterexample(capsys):
    code, out, _ = run(capsys, "series-poly", "5", "--x", "1")
    assert code == 1
    assert "not real-rooted; 3 real roots; complex pair ≈ -1.79±0.56i" in out
    code, obj = run_json(capsys, "series-poly", "5", "--x", "1")
    assert obj["certificate"]["distinct_real_roots"] == 3
    assert len(obj["nonreal_roots"]) == 2


def test_hstar_example(capsys):
    code, out, _ = run(capsys, "theorem", "hstar", "--theta", "2,1")
    assert code == 0
    assert "h* (counted):  1,5,2" in out and "A(prod):       1,5,2" in out
    code, obj = run_json(capsys, "theorem", "hstar", "--theta", "2,1")
    assert set(obj) == {"theta", "L", "ehrhart", "h_star", "A_product", "equal"}
    assert obj["L"] == [1, 8, 23] and obj["equal"] is True


def test_apply_decompose_gamma(capsys):
    assert run(capsys, "apply", "--poly", "1,2,1")[1].strip() == "1,3,1"
    code, obj = run_json(capsys, "decompose", "--poly", "1,3,4,2", "--n", "3")
    assert obj["a"] == {"coeffs": ["1", "2", "2", "1"]} and obj["b"] == {"coeffs": ["1", "2", "1"]}
    assert run(capsys, "gamma", "--poly", "1,7,7,1", "--n", "3")[1].strip() == "1,4"
    code, obj = run_json(capsys, "gamma-counts", "4")
    assert code == 0 and obj["equal"] and obj["counts"] == [1, 11, 5]


def test_realroot_and_interlace(capsys):
    code, obj = run_json(capsys, "realroot", "--poly", "1,2,1")
    assert code == 0 and obj["distinct_real_roots"] == 1
    assert run(capsys, "realroot", "--poly", "1,0,1")[0] == 1
    code, obj = run_json(capsys, "interlace", "--g", "0,1,1", "--f", "0,1,4,1")
    assert code == 0 and obj["relation"] == "Interlaces"
    code, obj = run_json(capsys, "interlace", "--g", "0,1", "--f", "1,4,1")
    assert code == 1 and obj["relation"] == "DoesNotInterlace"


def test_theorems(capsys):
    code, obj = run_json(capsys, "theorem", "main1", "--n", "4", "--q", "1/2")
    assert code == 0 and obj["holds"] and obj["relation"] == "InterlacesStrictly"
    code, obj = run_json(capsys, "theorem", "interlacing", "--n", "4", "--p", "1/4", "--q", "3/4")
    assert code == 0 and obj["reverse_relation"] == "InterlacesStrictly"


def test_topoint_file(capsys, tmp_path):
    path = tmp_path / "cx.json"
    path.write_text('{"n": 3, "maximal_faces": [[1,2],[3]]}')
    code, obj = run_json(capsys, "theorem", "topoint", "--complex", str(path))
    assert code == 0 and obj["equal"] and obj["f_identity"]
    assert obj["complex"] == {"n": 3, "maximal_faces": [[3], [1, 2]]}
    # f = 1 + 3t + t^2, A(f) = 1 + 3t + (t + t^2)
    assert obj["h_delta_prime"] == {"coeffs": ["1", "4", "1"]}


def test_probe_deterministic(capsys):
    a = run_json(capsys, "probe", "--n", "3", "--trials", "5", "--seed", "1")
    b = run_json(capsys, "probe", "--n", "3", "--trials", "5", "--seed", "1")
    assert a == b and a[0] == 0 and len(a[1]) == 5


def test_stats(capsys):
    code, obj = run_json(capsys, "stats", "--perm", "1,2")
    assert obj["exc"] == 0 and obj["bad"] == 2 and obj["fixed_points"] == [1, 2]


@pytest.mark.parametrize("argv,code", [
    (["nonsense"], 2),
    (["eulerian"], 2),
    (["apply", "--poly", "1,x"], 2),
    (["decompose", "--poly", "1,1,1", "--n", "1"], 3),
    (["interlace", "--g", "1", "--f", "1,0,1"], 3),
    (["theorem", "topoint", "--complex", "/nonexistent.json"], 3),
    (["theorem", "interlacing", "--n", "2", "--p", "1", "--q", "0"], 3),
    (["gamma-counts", "10"], 4),
    (["probe", "--n", "13", "--trials", "1"], 4),
    (["theorem", "hstar", "--theta", "1,1,1,1,1"], 4),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "eulerian_ops", "eulerian", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "0,1,11,11,1"
