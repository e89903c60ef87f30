import json

import pytest

from dscurves import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_wset_json(capsys):
    code, out, _ = run(["wset", "--field-order", "3", "--y", "t", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["weil"]) == 6


def test_pcheck_exit_codes(capsys):
    code, _, _ = run(["pcheck", "--field-order", "3", "--y", "t",
                      "--p", "t^3+t^2+t+2"], capsys)
    assert code == 0
    code, _, _ = run(["pcheck", "--field-order", "3", "--y", "t",
                      "--p", "t+1"], capsys)
    assert code == 1


def test_pset_json(capsys):
    code, out, _ = run(["pset", "--field-order", "3", "--y", "t", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert "t^3+t^2+t+2" not in data["pset"]
    assert "t+1" in data["pset"]


def test_criterion_and_local(capsys):
    rad = "t^5+t^4+t^3+t^2+2t"  # y * ram1 * ram2 for the arguments below
    from dscurves.fpoly import format_poly, parse_poly
    y = parse_poly("t", 3)
    r1 = parse_poly("t^3+t^2+t+2", 3)
    r2 = parse_poly("t+1", 3)
    rad = format_poly(y * r1 * r2)
    base = ["--field-order", "3", "--ram1", "t^3+t^2+t+2", "--ram2", "t+1",
            "--radicand", rad, "--eps", "1"]
    code, _, _ = run(["criterion", "--y", "t"] + base, capsys)
    assert code == 0
    code, out, _ = run(["local", "--json"] + base, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and not data["unwitnessed"]


def test_certify_verify_cycle(tmp_path, capsys):
    path = tmp_path / "cert.json"
    code, _, _ = run(["certify", "--field-order", "3",
                      "--ram1", "t^3+t^2+t+2", "--ram2", "t+1",
                      "--y", "t", "--out", str(path)], capsys)
    assert code == 0
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and "VALID" in out
    # tamper: flip a criterion flag
    data = json.loads(path.read_text())
    data["criterion"]["ram1_excluded"] = False
    path.write_text(json.dumps(data))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    # break the schema
    del data["criterion"]
    path.write_text(json.dumps(data))
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 3


def test_verify_unreadable_file(capsys):
    code, _, _ = run(["verify", "/nonexistent/cert.json"], capsys)
    assert code == 3


def test_invalid_inputs_exit_2(capsys):
    code, _, err = run(["wset", "--field-order", "4", "--y", "t"], capsys)
    assert code == 2
    code, _, err = run(["wset", "--field-order", "3", "--y", "t^2+2t+1"], capsys)
    assert code == 2
    code, _, err = run(["pcheck", "--field-order", "3", "--y", "t", "--p", "t"], capsys)
    assert code == 2
    code, _, err = run(["wset", "--field-order", "3", "--y", "5t+("], capsys)
    assert code == 2


def test_search_small_contains_known_triple(capsys):
    code, out, _ = run(["search", "--field-order", "3",
                        "--max-deg1", "3", "--max-deg2", "1", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    pairs = {(t["ram1"], t["ram2"]) for t in data["triples"]}
    assert ("t^3+t^2+t+2", "t+1") in pairs
    for t in data["triples"]:
        assert t["certificate"]["verdict"] == "VALID"


def test_search_threads_agrees_with_serial(capsys):
    base = ["search", "--field-order", "3", "--max-deg1", "3",
            "--max-deg2", "1", "--json"]
    _, serial, _ = run(base, capsys)
    _, threaded, _ = run(base + ["--threads", "2"], capsys)
    assert serial == threaded
