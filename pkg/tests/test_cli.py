import json

import pytest

from polygv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_mw(capsys, tmp_path):
    out = tmp_path / "mw.json"
    code, _, _ = run_cli(
        capsys, "construct", "--family", "mw", "--K", "2", "--D", "4", "--N", "7",
        "--out", str(out),
    )
    assert code == 0
    obj = json.loads(out.read_text())
    assert len(obj["vertices"]) == 7
    assert len(obj["facets"]) == 11
    assert obj["dim"] == 3


def test_construct_is_byte_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run_cli(
            capsys, "construct", "--family", "diamond",
            "--k", "1", "--d", "6", "--n", "9", "--a", "2", "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_construct_cyclic_and_lex(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "cyclic", "--K", "2", "--m", "5")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 5
    code, out, _ = run_cli(
        capsys, "construct", "--family", "lex", "--base", "cyclic",
        "--K", "2", "--m", "5", "--a", "2",
    )
    assert code == 0
    assert json.loads(out)["facets"] == [["c1", "c2", "c5"], ["c2", "c3", "c4"], ["c2", "c4", "c5"]]


def test_construct_missing_flags_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "construct", "--family", "mw", "--K", "2")
    assert code == 2
    assert "needs" in err


def test_construct_bad_params_is_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "construct", "--family", "mw", "--K", "9", "--D", "4", "--N", "7"
    )
    assert code == 2
    assert "polygv:" in err


def test_fvec_and_gvec_simplicial(capsys, tmp_path):
    source = tmp_path / "c47.json"
    run_cli(capsys, "construct", "--family", "cyclic", "--K", "4", "--m", "7", "--out", str(source))
    code, out, _ = run_cli(capsys, "fvec", "--in", str(source))
    assert code == 0
    assert json.loads(out) == {"dim": 3, "counts": [1, 7, 21, 28, 14]}
    code, out, _ = run_cli(capsys, "gvec", "--in", str(source), "--kind", "simplicial")
    obj = json.loads(out)
    assert obj["h"] == [1, 3, 6, 3, 1]
    assert obj["g"] == [1, 2, 3]
    assert obj["dehn_sommerville"] is True


def test_gvec_cubical_from_f(capsys, tmp_path):
    source = tmp_path / "cube.json"
    source.write_text(json.dumps({"d": 3, "f": [8, 12, 6]}))
    code, out, _ = run_cli(capsys, "gvec", "--in", str(source), "--kind", "cubical-from-f")
    assert code == 0
    obj = json.loads(out)
    assert obj["hc"] == [4, 4, 4, 4]
    assert obj["gc"] == [4, 0]
    assert obj["dehn_sommerville"] is True


def test_q_report_table(capsys):
    code, out, _ = run_cli(capsys, "q-report", "--k", "1", "--d", "6", "--n", "9")
    assert code == 0
    assert "(32, 448, 1088, 0)" in out
    assert "agree:           True" in out


def test_q_report_json(capsys):
    code, out, _ = run_cli(
        capsys, "q-report", "--k", "1", "--d", "6", "--n", "9", "--format", "json"
    )
    obj = json.loads(out)
    assert obj["gc_route_a"] == obj["gc_route_b"] == [32, 448, 1088, 0]
    assert obj["gsc_routes_agree"] and obj["gc_routes_agree"]


def test_ray_csv(capsys, tmp_path):
    out = tmp_path / "ray.csv"
    code, _, err = run_cli(
        capsys, "ray", "--k", "1", "--d", "6", "--n-from", "6", "--n-to", "9",
        "--out", str(out),
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("k,d,n,gc_1")
    assert len(lines) == 5
    assert "zero normalizer" in err  # the n=6 row


def test_stackedness_report(capsys):
    code, out, _ = run_cli(capsys, "stackedness", "--k", "1", "--d", "6", "--n", "9", "--a", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["witness"]["a"] == 1 and obj["witness"]["b"] == 4
    report = obj["diamonds"][0]
    assert report["missing_agree"] and report["facets_agree"]
    assert len(report["predicted_missing"]) == 6
    assert len(report["oracle_stacked_facets"]) == 6


def test_verify_small_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--grid", "small")
    assert code == 0
    assert "failed=0" in out
    assert "FAIL" not in out


@pytest.mark.parametrize("suite", ["transforms", "constructions", "qvectors", "stackedness"])
def test_verify_each_suite(capsys, suite):
    code, out, _ = run_cli(capsys, "verify", "--suite", suite, "--grid", "small")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("verify:")


def test_verify_respects_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("POLYGV_THREADS", "2")
    code, out, _ = run_cli(capsys, "verify", "--suite", "transforms", "--grid", "small")
    assert code == 0
    assert "failed=0" in out


def test_ray_bad_range_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "ray", "--k", "1", "--d", "6", "--n-from", "9", "--n-to", "6")
    assert code == 2
    assert "polygv:" in err
