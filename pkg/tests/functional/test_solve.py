import csv
import io
import json

import pytest

from turnwkb.services import SOLUTION_COLUMNS


def _csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_solve_text(run_line):
    result = run_line("turnwkb solve --eps 2^-5 --h 0.1")
    assert result.output.startswith("potential:")
    assert "airy-linear" in result.output
    assert "reflection_modulus:" in result.output
    header_line = next(
        line for line in result.output.splitlines() if line.startswith("x ")
    )
    assert [cell.strip() for cell in header_line.split("|")] == list(
        SOLUTION_COLUMNS
    )


def test_solve_csv(run_line):
    result = run_line("turnwkb solve --eps 2^-5 --h 0.1 -F csv")
    rows = _csv_rows(result.output)
    assert tuple(rows[0]) == SOLUTION_COLUMNS
    xs = [float(r["x"]) for r in rows]
    assert xs == sorted(xs)
    assert xs[0] == 0.0
    assert xs[-1] == 1.0
    # nine intervals of 0.1 on [x1, 1]
    assert sum(1 for x in xs if x >= 0.1 - 1e-12) == 10


def test_solve_json(run_line):
    result = run_line("turnwkb solve --eps 2^-5 --h 0.1 -F json")
    doc = json.loads(result.output)
    header = doc["header"]
    assert header["potential"] == "airy-linear"
    assert header["kind"] == "airy"
    assert header["phase"] == "exact"
    assert header["transparent_residual"] < 1e-10
    assert header["reflection_modulus"] == pytest.approx(1.0, abs=1e-8)
    assert set(doc["rows"][0]) == set(SOLUTION_COLUMNS)


def test_solve_out_file(run_line, tmp_path):
    path = tmp_path / "psi.csv"
    result = run_line(f"turnwkb solve --eps 2^-5 --h 0.1 --out {path}")
    # text still goes to stdout
    assert "reflection_modulus:" in result.output
    rows = _csv_rows(path.read_text())
    assert float(rows[-1]["x"]) == 1.0


def test_solve_out_file_json(run_line, tmp_path):
    path = tmp_path / "psi.json"
    result = run_line(f"turnwkb solve --eps 2^-5 --h 0.1 -F json --out {path}")
    assert result.output == ""
    assert json.loads(path.read_text())["header"]["eps"] == 2.0 ** -5


def test_solve_x1_override(run_line):
    result = run_line("turnwkb solve --eps 2^-5 --h 0.1 --x1 0.2 --jq header.x1")
    assert json.loads(result.output) == 0.2


def test_solve_pcf(run_line):
    result = run_line(
        "turnwkb solve --potential pcf-quadratic --eps 2^-4 --h 0.1 -F json"
    )
    header = json.loads(result.output)["header"]
    assert header["kind"] == "pcf"
    # no closed-form phase for a quadratic body
    assert header["phase"] == "adaptive:1e-12"


@pytest.mark.parametrize("flag", ["--config-potential {}", "--potential file:{}"])
def test_solve_potential_file(run_line, potential_file, flag):
    path = potential_file("tilted_linear.cfg")
    option = flag.format(path)
    result = run_line(f"turnwkb solve {option} --eps 2^-5 --h 0.1 -F json")
    header = json.loads(result.output)["header"]
    assert header["potential"] == f"file:{path}"
    assert header["transparent_residual"] < 1e-10


def test_solve_simpson_phase(run_line):
    result = run_line(
        "turnwkb solve --eps 2^-5 --h 0.1 --phase simpson:2 --jq header.phase"
    )
    assert json.loads(result.output) == "simpson:2"


def test_discontinuous_potential(run_line, potential_file):
    path = potential_file("discontinuous.cfg")
    result = run_line(
        f"turnwkb solve --config-potential {path} --h 0.1", assert_exit_code=2
    )
    assert "Assumption Violated" in result.stderr
    assert "not continuous at x1" in result.stderr


def test_malformed_potential_file(run_line, potential_file):
    path = potential_file("missing_body.cfg")
    result = run_line(f"turnwkb solve --config-potential {path}", assert_exit_code=2)
    assert "does not set body" in result.stderr


def test_eps_out_of_range(run_line):
    result = run_line("turnwkb solve --eps 2 --h 0.1", assert_exit_code=2)
    assert "exceeds the admissible bound" in result.stderr


def test_potential_selectors_are_exclusive(run_line, potential_file):
    path = potential_file("tilted_linear.cfg")
    result = run_line(
        f"turnwkb solve --potential airy-linear --config-potential {path}",
        assert_exit_code=2,
    )
    assert "--potential and --config-potential are mutually exclusive" in (
        result.stderr
    )


@pytest.mark.parametrize(
    "args", ["--eps 0.1,0.2", "--h 0.1,0.2", "--phase midpoint", "--x1 0.1,0.2"]
)
def test_single_values_only(run_line, args):
    run_line(f"turnwkb solve {args}", assert_exit_code=2)
