import json
import subprocess
import sys

import pytest

from baryhermite import cli


def write_problem(path, rows):
    path.write_text(json.dumps({"points": [{"z": z, "taylor": t} for z, t in rows]}))
    return str(path)


@pytest.fixture
def pair_cubic(tmp_path):
    return write_problem(tmp_path / "cubic.json", [(-1, [-1, 3]), (1, [1, 3])])


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_weights_golden(pair_cubic, capsys):
    code, out, _ = run(["weights", "--grid", pair_cubic], capsys)
    assert code == 0
    assert out.splitlines() == ["k,z,r,w", "1,-1,0,0.25", "1,-1,1,0.25", "2,1,0,0.25",
                                "2,1,1,-0.25"]


def test_weights_scale_delegates(pair_cubic, capsys):
    _, out, _ = run(["weights", "--grid", pair_cubic, "--scale", "2"], capsys)
    # w_{k,r} scales by sigma^-(N - n_k + r)
    assert out.splitlines()[1:] == ["1,-2,0,0.0625", "1,-2,1,0.03125", "2,2,0,0.0625",
                                    "2,2,1,-0.03125"]


def test_weights_cache_output(pair_cubic, tmp_path, capsys):
    cache = tmp_path / "cache.csv"
    assert run(["weights", "--grid", pair_cubic, "--cache", str(cache)], capsys)[0] == 0
    lines = cache.read_text().splitlines()
    assert lines[0] == "k,z,quantity,r,value" and "2,1,P,1,-1" in lines


@pytest.mark.parametrize("doc, field", [
    ({"points": [{"z": 0, "taylor": [1]}, {"z": "x", "taylor": [1]}]}, "points[1].z"),
    ({"points": [{"z": 0, "taylor": []}]}, "points[0].taylor"),
    ({"points": [{"z": 0, "taylor": [1, None]}]}, "points[0].taylor[1]"),
    ({"pts": []}, "points"),
])
def test_malformed_problem_exits_2(tmp_path, capsys, doc, field):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(["weights", "--grid", str(path)], capsys)
    assert code == 2 and field in err


def test_invalid_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{points")
    assert run(["weights", "--grid", str(path)], capsys)[0] == 2


def test_interp_examples(pair_cubic, tmp_path, capsys):
    code, out, _ = run(["interp", "--grid", pair_cubic, "--at", "0"], capsys)
    assert code == 0 and out.splitlines() == ["z,value,error", "0,0,"]

    const = write_problem(tmp_path / "const.json", [(-2, [1, 0]), (0.5, [1]), (2, [1, 0, 0])])
    _, out, _ = run(["interp", "--grid", const, "--samples", "9", "--form", "2"], capsys)
    assert all(float(line.split(",")[1]) == pytest.approx(1, abs=1e-15)
               for line in out.splitlines()[1:])

    with pytest.raises(SystemExit) as info:
        cli.main(["interp", "--grid", pair_cubic, "--form", "3"])
    assert info.value.code == 2


def test_weights_round_trip_into_interp(pair_cubic, tmp_path, capsys):
    wpath = tmp_path / "w.csv"
    run(["weights", "--grid", pair_cubic, "--out", str(wpath)], capsys)
    direct = run(["interp", "--grid", pair_cubic, "--at", "0.5,2,-0.3"], capsys)[1]
    via_file = run(["interp", "--grid", pair_cubic, "--weights", str(wpath),
                    "--at", "0.5,2,-0.3"], capsys)[1]
    assert direct == via_file


def test_weights_file_mismatch_exits_2(pair_cubic, tmp_path, capsys):
    wpath = tmp_path / "w.csv"
    wpath.write_text("k,z,r,w\n1,-1,0,0.25\n1,-1,1,0.25\n2,3,0,0.25\n2,3,1,-0.25\n")
    code, _, err = run(["interp", "--grid", pair_cubic, "--weights", str(wpath), "--at", "0"],
                       capsys)
    assert code == 2 and "does not match" in err


def test_perturbed_interp_is_seeded(pair_cubic, capsys):
    args = ["interp", "--grid", pair_cubic, "--at", "0.25", "--perturb", "1e-3"]
    a = run(args + ["--seed", "1"], capsys)[1]
    b = run(args + ["--seed", "1"], capsys)[1]
    c = run(args + ["--seed", "2"], capsys)[1]
    assert a == b != c


@pytest.mark.parametrize("argv", [
    ["experiment-hat", "--K", "4", "8", "--n", "1", "2", "--samples", "50"],
    ["experiment-runge", "--K", "8", "--n", "3", "--form", "1", "--samples", "20"],
    ["weight-error", "--K", "4", "--n", "3"],
    ["update-demo", "--K", "4", "--n", "2", "--insert", "0.1", "-1.5"],
])
def test_commands_are_byte_deterministic(argv, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"out{i}.csv"
        assert cli.main(argv + ["--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] and outs[0].count(b"\n") >= 2


def test_experiment_samples_include_endpoints(tmp_path):
    path = tmp_path / "s.csv"
    cli.main(["experiment-runge", "--K", "4", "--n", "1", "--samples", "3",
              "--samples-out", str(path), "--out", str(tmp_path / "sup.csv")])
    xs = [float(line.split(",")[2]) for line in path.read_text().splitlines()[1:]]
    assert xs[0] == -1 and xs[-1] == 1 and len(xs) == 5


def test_experiment_hat_single_point(tmp_path):
    path = tmp_path / "sup.csv"
    cli.main(["experiment-hat", "--K", "1", "--n", "1", "--samples", "99", "--out", str(path)])
    sup = float(path.read_text().splitlines()[1].split(",")[3])
    # constant interpolant equal to 1 - |cos(pi/2)|; worst error at the end points
    assert sup == pytest.approx(1.0, abs=1e-15)


def test_update_demo_on_pair_grid(pair_cubic, tmp_path, capsys):
    code, out, _ = run(["update-demo", "--grid", pair_cubic, "--insert", "0", "1", "1"], capsys)
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert code == 0 and [r[2] for r in rows] == ["5", "6", "7"]
    assert float(rows[0][3]) <= 2.0 ** -52
    assert all(float(r[3]) <= 1e-14 for r in rows)


def test_fp_probe_passes_here():
    notes = cli.check_fp_environment()
    assert any("subnormals preserved" in n for n in notes)
    assert 0 < sys.float_info.min / 2 < sys.float_info.min


def test_fp_probe_detects_flush_to_zero():
    def ftz_divide(a, b):
        q = a / b
        return 0.0 if abs(q) < sys.float_info.min else q
    with pytest.raises(cli.FlushToZeroDetected):
        cli.check_fp_environment(divide=ftz_divide)


def test_ftz_aborts_experiments_only(pair_cubic, monkeypatch, capsys):
    def broken():
        raise cli.FlushToZeroDetected("flushed")
    monkeypatch.setattr(cli, "check_fp_environment", broken)
    code, _, err = run(["experiment-hat", "--K", "4", "--n", "1"], capsys)
    assert code == 1 and "flushed" in err
    assert run(["weights", "--grid", pair_cubic], capsys)[0] == 0


def test_module_entry_point(pair_cubic):
    proc = subprocess.run([sys.executable, "-m", "baryhermite", "weights", "--grid", pair_cubic],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[1] == "1,-1,0,0.25"
