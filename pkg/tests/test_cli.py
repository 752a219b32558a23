import json
import subprocess
import sys
from fractions import Fraction

import pytest

from shufflesym.cli import main
from shufflesym.cycles import CycleTypeDistribution, cycle_type_distribution
from shufflesym.shuffles import ExactDistribution, exact_shuffle_distribution
from shufflesym.symmetric import ShuffleParams

GSR2_JSON = {"alpha": ["1/2", "1/2"], "beta": [], "gamma": "0"}


@pytest.fixture
def gsr2_file(tmp_path):
    path = tmp_path / "gsr2.json"
    path.write_text(json.dumps(GSR2_JSON))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_cauchy_report(capsys, gsr2_file):
    code, out, _ = run(capsys, "verify", "cauchy", "--params", gsr2_file, "--D", "5")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert all(case["max_residual"] == "0" for case in report["cases"])
    assert "wall_time" not in out


def test_verify_timing_is_opt_in(capsys, gsr2_file):
    _, out, _ = run(capsys, "verify", "probinter", "--params", gsr2_file, "--n", "3", "--timing")
    assert "wall_time" in json.loads(out)["cases"][0]


def test_sample_is_reproducible(capsys, gsr2_file):
    argv = ("sample", "shuffle", "--params", gsr2_file, "--n", "52", "--count", "3", "--seed", "7")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    rows = first.strip().splitlines()[1:]
    assert len(rows) == 3
    assert all(sorted(map(int, r.split())) == list(range(1, 53)) for r in rows)


@pytest.mark.parametrize("what", ["word", "inverse"])
def test_sample_other_kinds(capsys, what):
    code, out, _ = run(capsys, "sample", what, "--params", "gsr2", "--n", "5", "--count", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)[what]) == 2


def test_sample_br(capsys):
    code, out, _ = run(capsys, "sample", "br", "--params", "gsr2", "--gamma-plus", "2", "--count", "50")
    assert code == 0 and out.startswith("shape,count,frequency")


def test_exact_dist_cap_exit_code(capsys, gsr2_file):
    code, _, err = run(capsys, "exact", "dist", "--params", gsr2_file, "--n", "7")
    assert code == 3 and "EnumerationTooLarge" in err


def test_exact_dist_csv_round_trip(capsys, tmp_path):
    out_file = tmp_path / "d.csv"
    code, _, _ = run(capsys, "exact", "dist", "--params", "gsr2", "--n", "3", "--output", str(out_file))
    assert code == 0
    assert ExactDistribution.from_csv(out_file.read_text()) == exact_shuffle_distribution(ShuffleParams.gsr(2), 3)


def test_exact_cycles_both_methods(capsys):
    _, a, _ = run(capsys, "exact", "cycles", "--params", "gsr2", "--n", "4")
    _, b, _ = run(capsys, "exact", "cycles", "--params", "gsr2", "--n", "4", "--method", "enumerate")
    assert a == b
    assert CycleTypeDistribution.from_csv(a) == cycle_type_distribution(ShuffleParams.gsr(2), 4)


def test_exact_cycles_cap(capsys):
    code, _, _ = run(capsys, "exact", "cycles", "--params", "gsr2", "--n", "31")
    assert code == 4


def test_exact_distances(capsys):
    code, out, _ = run(capsys, "exact", "distances", "--params", "gsr2", "--n", "3", "--k", "3", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and [r["k"] for r in rows] == [1, 2, 3]
    assert all(Fraction(r["separation"]) <= Fraction(r["bound"]) for r in rows)


@pytest.mark.parametrize("argv", [
    ("verify", "gessel", "--battery", "--n", "2", "--D", "3"),
    ("verify", "probinter", "--battery", "--n", "3"),
    ("verify", "c1", "--battery", "--n", "3"),
    ("verify", "duality", "--battery", "--n", "3"),
    ("verify", "convolution", "--battery", "--n", "3"),
    ("verify", "convolution", "--params", '{"alpha": ["1/2"], "gamma": "1/2"}', "--n", "3",
     "--target", '{"alpha": ["1/4"], "gamma": "3/4"}'),
    ("verify", "maj", "--n", "3", "--kmax", "2"),
    ("verify", "mybound", "--battery", "--n", "3", "--k", "3"),
    ("verify", "extend", "--params", "gsr2", "--samples", "4000"),
])
def test_verify_subcommands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["ok"]


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "convolution", "--params", "gsr2", "--n", "3", "--target", "gsr3")
    assert code == 1 and not json.loads(out)["ok"]


def test_verify_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", "c1", "--battery", "--n", "3")
    _, parallel, _ = run(capsys, "verify", "c1", "--battery", "--n", "3", "--jobs", "2")
    assert serial == parallel


def test_compute_subcommands(capsys):
    _, out, _ = run(capsys, "compute", "fixed-points", "--params", "gsr2", "--n", "2")
    assert json.loads(out)["expected_fixed_points"] == "3/2"
    _, out, _ = run(capsys, "compute", "sep-bound", "--params", "gsr2", "--n", "52", "--k", "19")
    assert Fraction(json.loads(out)["bound"]) == Fraction(1326, 2**19)
    _, out, _ = run(capsys, "compute", "limit-pmf", "--i", "1", "--q", "1", "--gamma", "1/2", "--format", "json")
    assert json.loads(out)["pmf"][0] == pytest.approx(0.5 * 0.6065306597126334)
    _, out, _ = run(capsys, "compute", "gap-prob", "--params", "gsr2", "--gamma-plus", "2", "--n", "3", "--format", "json")
    assert json.loads(out)["error_bound"] < 1e-12


@pytest.mark.parametrize("argv, code", [
    (("compute", "gap-prob", "--params", '{"beta": ["1"]}', "--n", "2"), 6),
    (("compute", "fixed-points", "--params", '{"alpha": ["1/2"]}'), 8),
    (("compute", "limit-pmf", "--gamma", "0"), 9),
])
def test_error_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "shufflesym", "compute", "fixed-points", "--params", "gsr2",
                          "--n", "3"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["expected_fixed_points"] == "7/4"
