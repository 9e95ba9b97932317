import json

import pytest

from beurling.cli import bench_rows, main


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write


@pytest.fixture
def z4(files):
    return files("z4.json", {"type": "cyclic_product", "moduli": [4]})


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out


def test_check_lemmas_pass(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 2])
    code, out = run(capsys, ["check-lemmas", "--group", z4, "--weight", w, "--trials", "30"])
    assert code == 0
    data = json.loads(out.out)
    assert data["ok"] and data["counts"]["fail"] == 0


def test_check_lemmas_nonabelian(capsys, files):
    s3 = files("s3.json", {"type": "cayley_table", "table": [
        [0, 1, 2, 3, 4, 5], [1, 0, 4, 5, 2, 3], [2, 5, 0, 4, 3, 1],
        [3, 4, 5, 0, 1, 2], [4, 3, 1, 2, 5, 0], [5, 2, 3, 1, 0, 4]]})
    code, out = run(capsys, ["check-lemmas", "--group", s3, "--trials", "20", "--json"])
    assert code == 0
    data = json.loads(out.out)
    status = {s["suite"]: s["status"] for s in data["suites"]}
    assert status["module_identities"] == "skipped"
    assert status["associativity"] == "pass"
    assert "\n" not in out.out.strip()


def test_check_lemmas_asymmetric(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 3])
    code, out = run(capsys, ["check-lemmas", "--group", z4, "--weight", w, "--trials", "20"])
    assert code == 0
    data = json.loads(out.out)
    status = {s["suite"]: s["status"] for s in data["suites"]}
    assert status["involution_isometry"] == "skipped"
    assert status["sigma_star"] == "skipped"
    assert data["symmetric_weight"] is False


def test_invalid_weight_exit_2(capsys, files, z4):
    w = files("bad.json", [1, 0.5, 0.5, 0.5])
    code, out = run(capsys, ["check-lemmas", "--group", z4, "--weight", w])
    assert code == 2
    assert out.err.startswith("invalid weight")


@pytest.mark.parametrize("argv", [
    ["check-lemmas"],
    ["check-lemmas", "--group", "/nonexistent.json"],
    ["convolve", "--group", "GROUP", "--f", "/nonexistent.json", "--g", "/nonexistent.json"],
])
def test_bad_input_exit_2(capsys, z4, argv):
    argv = [z4 if a == "GROUP" else a for a in argv]
    assert main(argv) == 2


def test_verify_weight(capsys, files, z4):
    code, out = run(capsys, ["verify-weight", "--group", z4, "--weight", files("w.json", [1, 2, 2, 2])])
    assert code == 0
    data = json.loads(out.out)
    assert data["ok"] and data["symmetric"] is True
    assert set(data) >= {"ok", "worst_pair", "worst_ratio"}
    code, out = run(capsys, ["verify-weight", "--group", z4, "--weight", files("b.json", [1, .5, .5, .5])])
    assert code == 1
    data = json.loads(out.out)
    assert not data["ok"] and data["worst_pair"] == [1, 3] and data["worst_ratio"] == pytest.approx(4)


def test_convolve(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 2])
    d1 = files("d1.json", [0, 1, 0, 0])
    for extra in ([], ["--fast"]):
        code, out = run(capsys, ["convolve", "--group", z4, "--weight", w, "--f", d1, "--g", d1] + extra)
        assert code == 0
        vals = json.loads(out.out)
        assert vals[2][0] == pytest.approx(2) and abs(vals[0][0]) < 1e-12
    code, out = run(capsys, ["convolve", "--group", z4, "--weight", w, "--f", d1, "--g", d1, "--classical"])
    assert json.loads(out.out)[2] == [1.0, 0.0]


def test_fourier(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 2])
    d1 = files("d1.json", [[0, 0], [1, 0], [0, 0], [0, 0]])
    code, out = run(capsys, ["fourier", "--group", z4, "--weight", w, "--f", d1])
    assert code == 0
    data = json.loads(out.out)
    assert data["characters"] == [[0], [1], [2], [3]]
    expected = [[2, 0], [0, -2], [-2, 0], [0, 2]]
    for got, want in zip(data["values"], expected):
        assert got == pytest.approx(want, abs=1e-12)


def test_translate(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 2])
    d1 = files("d1.json", [0, 1, 0, 0])
    code, out = run(capsys, ["translate", "--group", z4, "--weight", w, "--op", "theta", "--s", "1", "--f", d1])
    assert code == 0
    assert json.loads(out.out)[0] == [2.0, 0.0]
    assert main(["translate", "--group", z4, "--op", "gamma", "--s", "9", "--f", d1]) == 2


def test_rep_commands(capsys, files):
    g = files("z6.json", {"type": "cyclic_product", "moduli": [6]})
    w = files("w.json", [1, 2, 3, 3, 3, 2])
    code, out = run(capsys, ["rep", "round-trip", "--group", g, "--weight", w, "--dim", "3", "--trials", "5"])
    assert code == 0
    data = json.loads(out.out)
    assert data["ok"] and data["max_error"] < 1e-8
    code, out = run(capsys, ["rep", "regular", "--group", g])
    assert code == 0
    assert json.loads(out.out)["dim"] == 6


def test_rep_round_trip_rejects_asymmetric(capsys, files, z4):
    w = files("w.json", [1, 2, 2, 3])
    assert main(["rep", "round-trip", "--group", z4, "--weight", w]) == 2


def test_bench(capsys):
    code, out = run(capsys, ["bench", "--sizes", "1,64,256"])
    assert code == 0
    data = json.loads(out.out)
    assert data["ok"] and [r["n"] for r in data["rows"]] == [1, 64, 256]
    assert all(r["deviation"] < 1e-9 for r in data["rows"])
    assert main(["bench", "--sizes", "0"]) == 2


def test_bench_rows_skip_naive_for_large():
    rows = bench_rows([1 << 17])
    assert rows[0]["naive_s"] is None and "skipped" in rows[0]["note"]
