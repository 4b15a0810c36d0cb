import io
import json
import os
import subprocess
import sys

import pytest

from paritybias.cli import main, parse_class, parse_range, UsageError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_min_two_row():
    code, out, _ = run("count", "--class", "Q", "--n-max", "8")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,class,odd_heavy,even_heavy,balanced,total"
    assert lines[-1] == "8,d:0;m:2;f:,2,5,0,7"


def test_count_zero():
    code, out, _ = run("count", "--n-max", "0")
    assert code == 0 and out.splitlines()[1] == "0,d:0;m:1;f:,0,0,1,1"


def test_count_both_methods():
    code, out, _ = run("count", "--class", "P", "--n-max", "10", "--method", "both")
    assert code == 0 and len(out.splitlines()) == 12


def test_count_json():
    code, out, _ = run("count", "--class", "avoid:1,2", "--n-range", "9..10", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and [r["n"] for r in rows] == [9, 10]
    assert all(r["odd_heavy"] > r["even_heavy"] for r in rows)


def test_verify_theorem_passes():
    code, out, err = run("verify", "theorem", "T3", "--n-range", "8..60")
    assert code == 0 and err == ""
    assert all(line.split(",")[2] == "true" for line in out.splitlines()[1:])


def test_verify_reports_counterexample():
    code, _, err = run("verify", "formulas", "--n-range", "9..9")
    assert code == 1 and "C4/eq8 n=9" in err


def test_out_of_scope_failures_do_not_fail_run():
    code, out, _ = run("verify", "theorem", "T2", "--n-range", "1..19")
    assert code == 0 and ",false," in out


def test_verify_lemma_bound_range():
    code, out, _ = run("verify", "lemma", "LB", "--m-range", "26..40")
    assert code == 0 and out.count("\n") == 16


def test_verify_maps_clean_and_dirty():
    assert run("verify", "maps", "T1", "--n-range", "0..12")[0] == 0
    code, out, err = run("verify", "maps", "T1", "--n-range", "14..14")
    assert code == 1 and "audit failure: T1 n=14" in err
    assert out.splitlines()[0] == "family,n,domain,image,residual,collisions,violations"


@pytest.mark.parametrize("argv", [
    ["explore", "problem2", "--k", "2"],
    ["explore", "problem2"],
    ["count", "--class", "nope"],
    ["count", "--n-range", "5..2"],
    ["count", "--n-max", "3", "--n-range", "1..2"],
    ["count", "--jobs", "0"],
    ["verify", "theorem", "T9"],
    ["verify", "maps", "T7"],
    ["bogus"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_enum_guard_and_override():
    assert run("count", "--method", "enum", "--n-max", "61")[0] == 2
    assert run("count", "--method", "enum", "--n-range", "61..61", "--force-enum")[0] == 0


def test_explore_problem2_summary():
    code, out, _ = run("explore", "problem2", "--k", "4", "--horizon", "100")
    head, row = out.splitlines()
    assert code == 0 and head.startswith("claim,k,with_one,horizon,candidate")
    assert row.split(",")[4] == "2" and row.endswith("\"candidate, horizon-limited\"")


def test_explore_problem1_exit_zero_even_with_failures():
    code, out, _ = run("explore", "problem1", "--m-range", "14..16")
    assert code == 0 and "PROB1/even,30,false" in out


@pytest.mark.parametrize("argv", [
    ["count", "--class", "DQ", "--n-max", "40"],
    ["verify", "theorem", "T1", "--n-range", "1..40", "--method", "both"],
    ["verify", "maps", "--n-range", "10..16"],
])
def test_jobs_do_not_change_output(argv):
    assert run(*argv, "--jobs", "1")[1] == run(*argv, "--jobs", "8")[1]


def test_cache_warm_equals_cold(tmp_path):
    argv = ["count", "--class", "S2", "--n-max", "50", "--cache-dir", str(tmp_path)]
    cold = run(*argv)
    assert list(tmp_path.iterdir())
    warm = run(*argv)
    assert cold == warm


def test_cache_dir_from_environment(tmp_path):
    env = dict(os.environ, PARITYBIAS_CACHE_DIR=str(tmp_path))
    proc = subprocess.run([sys.executable, "-m", "paritybias.cli", "count", "--n-max", "5"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and "5,d:0;m:1;f:,4,1,2,7" in proc.stdout
    assert any(p.name.startswith("counts_") for p in tmp_path.iterdir())


def test_parsers():
    assert parse_range("3..5") == range(3, 6)
    assert parse_class("avoid:3").key() == "d:0;m:1;f:3"
    with pytest.raises(UsageError):
        parse_range("3-5")
