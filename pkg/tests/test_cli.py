import json

import pytest

from wtables.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture()
def cache_args(tmp_path):
    return ["--cache-dir", str(tmp_path / "cache")]


def test_rs(capsys, cache_args):
    data = run_json(capsys, *cache_args, "rs", "-2,-3,1,0,-1,3,2")
    assert data == {"tableau": [["-3", "-1", "2"], ["-2", "0", "3"], ["1"]]}


def test_rs_ascii(capsys, cache_args):
    code, out, _ = run(capsys, *cache_args, "--format", "ascii",
                       "rs", "1", "2")
    assert code == 0
    assert out.strip() == "1 2"


def test_bv(capsys, cache_args):
    data = run_json(capsys, *cache_args, "bv", "--gtype", "C",
                    "2,3,4,5,-1")
    assert data == {"partition": [4, 4, 2]}
    details = run_json(capsys, *cache_args, "bv", "--gtype", "C",
                       "--details", "2,3,4,5,-1")
    assert details["q"] == [4, 4, 2]
    raw = run_json(capsys, *cache_args, "bv", "--gtype", "B",
                   "--raw", "zero", "1,-2")
    assert raw == {"partition": [3, 1, 1]}


def test_tau_class_and_cache(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    args = ["--cache-dir", cache, "tau-class", "--members", "1,-2"]
    first = run_json(capsys, *args)
    assert first["seed"] == ["1", "-2"]
    assert ["-2", "1"] in first["members"]
    entries = list((tmp_path / "cache").glob("*.json"))
    assert len(entries) == 1
    second = run_json(capsys, *args)
    assert second == first


def test_domino_subcommands(capsys, cache_args, golden_domino):
    r_json = json.dumps(golden_domino["r"].to_json())
    data = run_json(capsys, *cache_args, "domino", "dt",
                    json.dumps([["-3", "-1", "2"], ["-2", "0", "3"], ["1"]]))
    assert data == golden_domino["dt"].to_json()
    cyc = run_json(capsys, *cache_args, "domino", "cycles", r_json)
    assert cyc == {"cycles": [[1], [2, 3]]}
    mt = run_json(capsys, *cache_args, "domino", "mt", "--cycle", "2,3",
                  r_json)
    assert mt == golden_domino["mt23"].to_json()
    cmp_out = run_json(capsys, *cache_args, "domino", "compare", "1,-2")
    assert cmp_out["cycle_sequence"] is not None


def test_caction_with_trace(capsys, cache_args, golden_c):
    a, ca = golden_c
    arg = json.dumps({"gtype": "C",
                      "rows": [[str(x) for x in r] for r in a.rows]})
    data = run_json(capsys, *cache_args, "caction", "--trace", arg)
    assert data["result"]["rows"] == [[str(x) for x in r] for r in ca.rows]
    names = [s["step"] for s in data["trace"]]
    assert names[0] == "input" and names[-1] == "result"


def test_classify(capsys, cache_args):
    data = run_json(capsys, *cache_args, "classify", "--gtype", "C",
                    "--partition", "4,4,2", "--bound", "2",
                    "--method", "both")
    assert data["counts"] == {"tables": 210, "finite_dimensional": 36,
                              "orbits": 24}
    code, out, _ = run(capsys, *cache_args, "classify", "--gtype", "C",
                       "--partition", "4,4,2", "--bound", "2",
                       "--format", "ascii")
    assert code == 0
    assert "finite-dimensional 36" in out
    assert "<- representative" in out


def test_render_round_trip(capsys, cache_args, golden_c):
    a, _ = golden_c
    arg = json.dumps({"gtype": "C",
                      "rows": [[str(x) for x in r] for r in a.rows]})
    code, out, _ = run(capsys, *cache_args, "render", "stable", arg)
    assert code == 0
    assert out.splitlines()[0] == "type C  pairs 4  p0 2  order 1"


def test_verify(capsys, cache_args):
    code, out, _ = run(capsys, *cache_args, "verify")
    assert code == 0
    assert "all golden checks passed" in out
    assert "FAIL" not in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"fmt": "ascii",
                               "cache_dir": str(tmp_path / "cache")}))
    code, out, _ = run(capsys, "--config", str(cfg), "rs", "1", "2")
    assert code == 0
    assert out.strip() == "1 2"
    # flags override the config file
    code, out, _ = run(capsys, "--config", str(cfg), "--format", "json",
                       "rs", "1", "2")
    assert json.loads(out) == {"tableau": [["1", "2"]]}


def test_usage_errors_exit_64(capsys, cache_args):
    assert run(capsys, *cache_args, "bv", "--gtype", "X", "1")[0] == 64
    assert run(capsys, *cache_args, "rs")[0] == 64
    assert run(capsys, *cache_args, "--cap", "0", "rs", "1")[0] == 64


def test_domain_errors_exit_2(capsys, cache_args, golden_domino):
    r_json = json.dumps(golden_domino["r"].to_json())
    code, _, err = run(capsys, *cache_args, "domino", "mt", "--cycle", "9",
                       r_json)
    assert code == 2
    assert "error" in err
    code, _, _ = run(capsys, *cache_args, "rs", "1/3")
    assert code == 2
