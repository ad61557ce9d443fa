import json

import pytest

from eternaldom.certificate import Certificate
from eternaldom.cli import main
from eternaldom.interval_model import parse_model

from conftest import DATA, fid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_sample15_certificate(capsys):
    code, out, _ = run(capsys, "solve", "--model", str(DATA / "sample15.model"), "--emit-certificate")
    assert code == 0
    cert = Certificate.from_json(out)
    assert cert.k == 8 and len(cert.blocks) == 5 and cert.consistent()
    assert [b.weight for b in cert.blocks] == [1, 3, 1, 2, 1]
    assert cert.eternal_set[2] == fid(4, 11)


def test_solve_is_deterministic(capsys):
    args = ("solve", "--model", str(DATA / "sample15.model"), "--emit-certificate")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_solve_text_and_plain(capsys):
    code, out, _ = run(capsys, "solve", "--model", str(DATA / "sample15.model"), "--format", "text")
    assert code == 0 and out.strip() == "8"
    code, out, _ = run(capsys, "solve", "--model", str(DATA / "sample15.model"),
                       "--format", "text", "--emit-certificate")
    assert "block 2 cds weight 3" in out


def test_solve_empty(tmp_path, capsys):
    f = tmp_path / "empty.model"
    f.write_text("0\n")
    code, out, _ = run(capsys, "solve", "--model", str(f), "--emit-certificate")
    cert = Certificate.from_json(out)
    assert code == 0 and cert.k == 0 and cert.blocks == ()


def test_solve_malformed(tmp_path, capsys):
    f = tmp_path / "bad.model"
    f.write_text("2\na 1 2\nb 4 3\n")
    code, _, err = run(capsys, "solve", "--model", str(f))
    assert code == 1 and "line 3" in err


def test_oracle_c4_games(capsys):
    code, out, _ = run(capsys, "oracle", "--graph", str(DATA / "c4.graph"), "--game", "all")
    assert code == 0 and out.split() == ["2", "2", "2"]


def test_oracle_k1(tmp_path, capsys):
    f = tmp_path / "k1.graph"
    f.write_text("p 1 0\n")
    code, out, _ = run(capsys, "oracle", "--graph", str(f), "--game", "all-simple")
    assert code == 0 and out.strip() == "1"


def test_oracle_report_json(capsys):
    code, out, _ = run(capsys, "oracle", "--graph", str(DATA / "c4.graph"), "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["theta_c"] == 2 and all(rep["chains"].values())


def test_oracle_model_input(capsys):
    code, out, _ = run(capsys, "oracle", "--model", str(DATA / "sample15.model"), "--game", "all-simple")
    assert code == 2  # 15 vertices is above the default limit


def test_oracle_limit(tmp_path, capsys):
    f = tmp_path / "p30.graph"
    f.write_text("p 30 29\n" + "".join(f"e {i} {i + 1}\n" for i in range(1, 30)))
    code, _, err = run(capsys, "oracle", "--graph", str(f))
    assert code == 2 and "limit" in err


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "6", "--seed", "1", "--trials", "100")
    assert code == 0 and out.strip().endswith("100/100 pass")


def test_verify_sample15(capsys):
    code, out, _ = run(capsys, "verify", "--model", str(DATA / "sample15.model"))
    assert code == 0 and "1/1 pass" in out


def test_verify_zero_trials(capsys):
    code, out, _ = run(capsys, "verify", "--random", "5", "--trials", "0")
    assert code == 0 and "0/0 pass" in out


def test_verify_budget(capsys):
    code, _, _ = run(capsys, "verify", "--random", "10", "--trials", "1", "--budget", "1")
    assert code == 2


@pytest.mark.parametrize("kind", ["general", "proper"])
def test_gen(capsys, kind):
    outs = [run(capsys, "gen", "--n", "12", "--seed", "4", "--kind", kind)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    m = parse_model(outs[0])
    assert m.n == 12 and m.canonical


def test_bench_rows(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "1000", "--repeats", "1")
    rows = [l for l in out.splitlines() if l.split()[1:2] == ["1000"]]
    assert code == 0 and len(rows) == 1


def test_bench_both_backends(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "500,1000", "--repeats", "1", "--backend", "both")
    assert code == 0 and "numba ratios" in out and "numpy ratios" in out


@pytest.mark.parametrize("sizes", ["", "200,100"])
def test_bench_usage_errors(capsys, sizes):
    code, _, _ = run(capsys, "bench", "--sizes", sizes)
    assert code == 1
