"""End-to-end CLI tests through subprocess: frozen stdout, exit codes,
error channels and determinism."""

import json
import subprocess
import sys

AZTEC_4 = "\n".join(
    [
        "...##...",
        "..####..",
        ".######.",
        "########",
        "########",
        ".######.",
        "..####..",
        "...##...",
    ]
)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "skewrook", *args],
        capture_output=True,
        text=True,
    )


def test_hull_right():
    r = run_cli("hull", "35124")
    assert r.returncode == 0
    assert r.stdout == "###..\n#####\n#####\n.####\n...##\n"
    assert r.stderr == ""


def test_hull_left():
    r = run_cli("hull", "231", "--side", "left")
    assert r.returncode == 0
    assert r.stdout == ".##\n.##\n#..\n"


def test_check_violating():
    r = run_cli("check", "4231")
    assert r.returncode == 0
    assert r.stdout.strip() == (
        '{"avoids":false,"violating_pattern":"4231","positions":[1,2,3,4]}'
    )


def test_check_avoiding():
    r = run_cli("check", "35124")
    assert r.returncode == 0
    assert r.stdout.strip() == '{"avoids":true,"violating_pattern":null,"positions":null}'


def test_poincare_pair():
    r = run_cli("poincare", "--u", "1234", "--w", "3412")
    assert r.returncode == 0
    assert r.stdout.strip() == '{"min_exp":0,"coeffs":["1","3","5","4","1"]}'


def test_poincare_pair_brute_agrees():
    rook = run_cli("poincare", "--u", "1234", "--w", "3412")
    brute = run_cli("poincare", "--u", "1234", "--w", "3412", "--method", "brute")
    assert rook.stdout == brute.stdout


def test_poincare_pair_flipped_lower_end():
    # u itself may contain patterns as long as its flip avoids them
    r = run_cli("poincare", "--u", "4231", "--w", "4321")
    assert r.returncode == 0
    assert r.stdout.strip() == '{"min_exp":5,"coeffs":["1","1"]}'


def test_poincare_type_A_routes_agree():
    formula = run_cli("poincare", "--type", "A", "--n", "4", "--k", "2")
    rook = run_cli("poincare", "--type", "A", "--n", "4", "--k", "2", "--method", "rook")
    brute = run_cli("poincare", "--type", "A", "--n", "4", "--k", "2", "--method", "brute")
    assert formula.returncode == 0
    assert formula.stdout.strip() == '{"min_exp":0,"coeffs":["1","3","5","4","1"]}'
    assert rook.stdout == formula.stdout
    assert brute.stdout == formula.stdout


def test_poincare_at_one():
    r = run_cli("poincare", "--type", "A", "--n", "5", "--k", "2", "--at-one")
    assert r.returncode == 0
    assert r.stdout.strip() == "46"


def test_poincare_dp_needs_at_one():
    good = run_cli(
        "poincare", "--type", "A", "--n", "4", "--k", "2", "--method", "dp", "--at-one"
    )
    assert good.returncode == 0
    assert good.stdout.strip() == "14"
    bad = run_cli("poincare", "--type", "A", "--n", "4", "--k", "2", "--method", "dp")
    assert bad.returncode == 2
    assert "--at-one" in bad.stderr


def test_poincare_type_B_routes_agree():
    formula = run_cli("poincare", "--type", "B", "--n", "2")
    rook = run_cli("poincare", "--type", "B", "--n", "2", "--method", "rook")
    brute = run_cli("poincare", "--type", "B", "--n", "2", "--method", "brute")
    assert formula.returncode == 0
    assert formula.stdout.strip() == '{"min_exp":0,"coeffs":["1","2","2","1"]}'
    assert rook.stdout == formula.stdout
    assert brute.stdout == formula.stdout


def test_poincare_argument_validation():
    assert run_cli("poincare", "--u", "123", "--w", "1234").returncode == 2
    assert run_cli("poincare", "--type", "A", "--n", "3", "--k", "3").returncode == 2
    assert run_cli("poincare", "--type", "B", "--n", "2", "--k", "1").returncode == 2
    assert run_cli("poincare", "--u", "12", "--w", "21", "--type", "A").returncode == 2
    assert run_cli("poincare", "--u", "12").returncode == 2
    assert run_cli("poincare").returncode == 2


def test_pattern_violations_exit_3():
    r = run_cli("poincare", "--u", "1234", "--w", "4231")
    assert r.returncode == 3
    assert "w = 4231 contains the pattern 4231 at positions [1, 2, 3, 4]" in r.stderr
    assert r.stdout == ""
    r = run_cli("poincare", "--u", "1324", "--w", "4321")
    assert r.returncode == 3
    assert "flip_ud(u) = 4231" in r.stderr


def test_bad_permutation_exits_2():
    r = run_cli("hull", "121")
    assert r.returncode == 2
    assert "not a permutation" in r.stderr
    assert r.stdout == ""


def test_count_max_rep_and_word():
    assert run_cli("count", "--n", "4", "--k", "2").stdout.strip() == "14"
    assert run_cli("count", "--word", "231", "--k", "2").stdout.strip() == "4"
    brute = run_cli("count", "--n", "9", "--k", "4", "--method", "brute")
    dp = run_cli("count", "--n", "9", "--k", "4")
    assert brute.stdout.strip() == dp.stdout.strip() == "41506"


def test_count_rejects_bad_word():
    r = run_cli("count", "--word", "231", "--k", "1")
    assert r.returncode == 2
    assert "must increase away from position 1" in r.stderr
    assert run_cli("count", "--word", "231").returncode == 2
    assert run_cli("count", "--k", "2").returncode == 2


def test_qstirling_row():
    r = run_cli("qstirling", "--n", "3")
    assert r.returncode == 0
    assert json.loads(r.stdout) == [
        {"min_exp": 0, "coeffs": ["1"]},
        {"min_exp": 1, "coeffs": ["2", "1"]},
        {"min_exp": 3, "coeffs": ["1"]},
    ]


def test_polybernoulli_values():
    assert run_cli("polybernoulli", "--n", "2", "--k", "2").stdout.strip() == "14"
    assert run_cli("polybernoulli", "--n", "4", "--k", "2").stdout.strip() == "146"
    assert run_cli("polybernoulli", "--n", "2", "--k", "-1").returncode == 2


def test_table_theorem8_tsv():
    r = run_cli("table", "--kind", "theorem8", "--max-n", "4")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "2\t1\t2\t2\t2",
        "3\t1\t4\t4\t4",
        "3\t2\t4\t4\t4",
        "4\t1\t8\t8\t8",
        "4\t2\t14\t14\t14",
        "4\t3\t8\t8\t8",
    ]
    assert run_cli("table", "--kind", "theorem8", "--max-n", "1").returncode == 2


def test_table_json():
    r = run_cli("table", "--kind", "qstirling", "--max-n", "2", "--format", "json")
    assert json.loads(r.stdout) == [["0", "1"], ["1", "0", "1"], ["2", "0", "1", "q"]]


def test_table_polybernoulli():
    r = run_cli("table", "--kind", "polybernoulli", "--max-n", "2", "--max-k", "3")
    assert r.stdout.splitlines() == [
        "0\t1\t1\t1\t1",
        "1\t1\t2\t4\t8",
        "2\t1\t4\t14\t46",
    ]


def test_verify_passes():
    r = run_cli("verify", "--suite", "rook", "--max-n", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    passed, total = lines[-1].split()[0].split("/")
    assert passed == total
    assert r.stderr == ""


def test_verify_clamps_with_warning():
    r = run_cli("verify", "--suite", "typeB", "--max-n", "9")
    assert r.returncode == 0
    assert "exceeds the documented limit 4; clamping" in r.stderr
    assert r.stdout.splitlines()[-1] == "4/4 checks passed"


def test_verify_rejects_unknown_suite():
    assert run_cli("verify", "--suite", "nonsense").returncode == 2


def test_runs_are_deterministic():
    for args in (
        ("poincare", "--type", "A", "--n", "5", "--k", "2"),
        ("table", "--kind", "theorem8", "--max-n", "5"),
        ("verify", "--suite", "stirling", "--max-n", "3"),
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode
