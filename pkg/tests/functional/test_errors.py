import json


def test_precision_budget(run_line, write_config):
    write_config("[numerics]\npcf_max_digits = 10\n")
    result = run_line(
        "turnwkb solve --potential pcf-quadratic --eps 2^-5 --h 0.1",
        assert_exit_code=3,
    )
    assert "but the budget is 10" in result.stderr
    assert "pcf_max_digits" in result.stderr


def test_precision_budget_json(run_line, write_config):
    write_config("[numerics]\npcf_max_digits = 10\n")
    result = run_line(
        "turnwkb solve --potential pcf-quadratic --eps 2^-5 --h 0.1 -F json",
        assert_exit_code=3,
    )
    report = json.loads(result.stderr)
    assert report["error_name"] == "Precision Budget Exceeded"
    assert report["budget"] == "10"


def test_numerics_error(run_line):
    # four eps values are too few for a blow-up fit
    result = run_line("turnwkb blowup --eps 2^-4..2^-7 --h 0.1", assert_exit_code=1)
    assert "Numerics Error" in result.stderr
    assert "at least 5 eps values" in result.stderr


def test_no_exact_solution_for_file_potentials(run_line, potential_file):
    path = potential_file("tilted_linear.cfg")
    result = run_line(
        f"turnwkb convergence --config-potential {path} --eps 2^-4 --h 0.1",
        assert_exit_code=1,
    )
    assert "UnsupportedExact" in result.stderr


def test_bench_needs_the_linear_potential(run_line):
    result = run_line(
        "turnwkb bench --potential pcf-quadratic --eps 2^-4", assert_exit_code=1
    )
    assert "airy-linear" in result.stderr


def test_debug_shows_the_traceback(run_line):
    result = run_line(
        "turnwkb blowup --debug --eps 2^-4..2^-7 --h 0.1", assert_exit_code=1
    )
    assert "Traceback" in result.stderr
