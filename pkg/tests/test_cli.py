import json

import pytest

from dyckchi import cli
from dyckchi.algebra import q
from dyckchi.symfunc import SymFunc
from dyckchi.verify import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(line) for line in out.splitlines()]


def test_dyck_stats_sample(capsys):
    code, out, _ = run(capsys, "dyck", "stats", "NNENEENNENEE")
    assert code == 0
    data = json.loads(out)
    assert data["area"] == [[1, 2], [2, 3], [4, 5], [5, 6]]
    assert data["corners"] == [[1, 3], [3, 4], [4, 6]]
    assert data["x_coords"] == [1, 1, 2, 4, 4, 5]
    assert data["sigma"] == [1, 3, 4, 2, 5, 6]


@pytest.mark.parametrize(
    "action, path, expected",
    [
        ("zeta", "NNENEENNENEE", "NNENNENNEEEE"),
        ("zeta-inv", "NNENNENNEEEE", "NNENEENNENEE"),
        ("rev", "NENNENEE", "NNENEENE"),
        ("rev", "10", "NE"),
    ],
)
def test_dyck_maps(capsys, action, path, expected):
    assert run(capsys, "dyck", action, path)[:2] == (0, expected + "\n")


@pytest.mark.parametrize("bad", ["NEE", "NXNE", "EN"])
def test_dyck_malformed_path(capsys, bad):
    code, out, err = run(capsys, "dyck", "stats", bad)
    assert code == 2 and out == "" and "malformed" in err


def test_chi_compute(capsys):
    code, out, _ = run(capsys, "chi", "compute", "NNEE", "--basis", "schur")
    assert code == 0
    assert SymFunc.from_json(json.loads(out)) == SymFunc(2, "schur", {(2,): 1, (1, 1): q})
    code, out, _ = run(capsys, "chi", "compute", "NENE", "--slice", "bottom")
    assert SymFunc.from_json(json.loads(out)) == SymFunc(2, "monomial", {(1, 1): 1})
    code, out, _ = run(capsys, "chi", "compute", "NE")
    assert SymFunc.from_json(json.loads(out)) == SymFunc(1, "monomial", {(1,): 1})


def test_chi_slice_forms(capsys):
    _, top, _ = run(capsys, "chi", "compute", "NENE", "--slice", "top")
    _, t1, _ = run(capsys, "chi", "compute", "NENE", "--slice", "t=1")
    assert top == t1
    assert run(capsys, "chi", "compute", "NENE", "--slice", "middle")[0] == 2
    assert run(capsys, "chi", "compute", "NENE", "--slice", "t=x")[0] == 2


def test_lambda(capsys):
    code, out, _ = run(capsys, "lambda", "paths", "3,2")
    assert code == 0
    assert out == "inv\tNNENENNEEE\nquinv\tNNNENENEEE\nbalanced\tNENNEENNEE\n"
    code, out, _ = run(capsys, "lambda", "alpha", "3,2", "--json")
    assert json.loads(out) == {"alpha_inv": 1, "alpha_quinv": 3, "corner_count": 2}
    code, out, _ = run(capsys, "lambda", "paths", "4", "--json")
    assert json.loads(out) == {"inv": "NNNNEEEE", "quinv": "NNNNEEEE", "balanced": "NENENENE"}


@pytest.mark.parametrize("bad", ["2,3", "3,-1", "a", ""])
def test_lambda_bad_partition(capsys, bad):
    assert run(capsys, "lambda", "alpha", bad)[0] == 2


@pytest.mark.parametrize(
    "argv, count",
    [
        (["verify", "main-theorem", "--max-size", "4"], 11),
        (["verify", "main-theorem", "--lambda", "3,2"], 1),
        (["verify", "zeta-conjugation", "--max-size", "5"], 18),
        (["verify", "rev-invariance", "--max-semilength", "4"], 23),
        (["verify", "corner-flip", "--max-semilength", "3"], 9),
        (["verify", "omega-bar", "--max-semilength", "3"], 9),
        (["verify", "closed-forms", "--n", "4"], 1),
        (["verify", "block-swap", "--blocks", "1,2,2", "--i", "1"], 1),
        (["scan", "schur-positivity", "--max-semilength", "5"], 65),
        (["scan", "schur-positivity", "--max-semilength", "1"], 2),
    ],
)
def test_verify_passes(capsys, argv, count):
    code, out, _ = run(capsys, *argv)
    records = lines(out)
    assert code == 0
    assert len(records) == count + 1
    for rec in records:
        assert {"check", "instance", "pass", "counterexample"} <= set(rec)
        assert rec["pass"] is True and rec["counterexample"] is None
    assert records[-1]["details"] == {"instances": count, "failed": 0}


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "main-theorem"],
        ["verify", "rev-invariance"],
        ["verify", "closed-forms", "--n", "0"],
        ["verify", "block-swap", "--blocks", "1,2"],
        ["verify", "block-swap", "--blocks", "2,2", "--i", "1"],
        ["verify", "block-swap", "--blocks", "1,2", "--i", "5"],
        ["verify", "block-swap", "--blocks", "1,x", "--i", "1"],
        ["verify", "rev-invariance", "--max-semilength", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "no-such-check"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["scan", "schur-positivity", "--max-semilength", "2", "--jobs", "0"])
    assert exc.value.code == 2


def test_counterexample_exit_1(capsys, monkeypatch):
    def failing(path):
        ok = path.semilength != 2
        return Report("schur-positivity", path.steps, ok, None if ok else {"witness": path.steps})

    monkeypatch.setitem(cli._CHECKS, "schur-positivity", (failing, cli._CHECKS["schur-positivity"][1]))
    code, out, _ = run(capsys, "scan", "schur-positivity", "--max-semilength", "3")
    records = lines(out)
    assert code == 1
    assert [r["instance"] for r in records[:-1] if not r["pass"]] == ["NNEE", "NENE"]
    assert records[-1]["pass"] is False
    assert records[-1]["details"]["failed"] == 2


def test_max_semilength_cap(capsys, monkeypatch):
    monkeypatch.setenv("CHI_MAX_SEMILENGTH", "3")
    assert run(capsys, "scan", "schur-positivity", "--max-semilength", "4")[0] == 2
    assert run(capsys, "verify", "main-theorem", "--max-size", "4")[0] == 2
    assert run(capsys, "scan", "schur-positivity", "--max-semilength", "3")[0] == 0
    monkeypatch.setenv("CHI_MAX_SEMILENGTH", "many")
    assert run(capsys, "scan", "schur-positivity", "--max-semilength", "1")[0] == 2


def test_jobs_output_is_byte_stable(capsys):
    argv = ["scan", "schur-positivity", "--max-semilength", "5"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    _, again, _ = run(capsys, *argv, "--jobs", "3")
    assert serial == parallel == again


def test_scan_out_file(capsys, tmp_path):
    target = tmp_path / "scan.jsonl"
    code, out, _ = run(capsys, "scan", "schur-positivity", "--max-semilength", "4", "--out", str(target))
    assert code == 0 and out == ""
    records = lines(target.read_text())
    assert len(records) == 1 + 1 + 2 + 5 + 14 + 1
    assert records[-1]["instance"] == "summary"
