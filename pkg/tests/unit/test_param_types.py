import click
import pytest

from turnwkb.parsing import (
    FloatListType,
    PhaseMethodType,
    PotentialSelector,
    PotentialType,
    parse_float,
)


@pytest.mark.parametrize(
    "token, value",
    [
        ("0.25", 0.25),
        ("2^-4", 0.0625),
        ("2**-3", 0.125),
        (" 10^2 ", 100.0),
        ("1e-3", 1e-3),
    ],
)
def test_parse_float(token, value):
    assert parse_float(token) == value


def _cmd(param_type):
    @click.command()
    @click.option("--value", type=param_type)
    def cmd(value):
        click.echo(repr(value))

    return cmd


@pytest.mark.parametrize(
    "arg, expected",
    [
        ("0.1", (0.1,)),
        ("0.1,0.2", (0.1, 0.2)),
        ("2^-4..2^-6", (2.0 ** -4, 2.0 ** -5, 2.0 ** -6)),
        ("2^-6..2^-4", (2.0 ** -6, 2.0 ** -5, 2.0 ** -4)),
        ("2^-4..2^-5, 0.01", (2.0 ** -4, 2.0 ** -5, 0.01)),
        ("0.1,,0.2,", (0.1, 0.2)),
    ],
)
def test_float_list(run_command, arg, expected):
    result = run_command(_cmd(FloatListType()), ["--value", arg])
    assert result.output.strip() == repr(expected)


@pytest.mark.parametrize(
    "arg, fragment",
    [
        ("abc", "not a comma separated list"),
        (",", "at least one value"),
        ("0.1,-0.2", "not positive"),
        ("0", "not positive"),
    ],
)
def test_float_list_rejects(run_command, arg, fragment):
    result = run_command(_cmd(FloatListType()), ["--value", arg], exit_code=2)
    assert fragment in result.output


def test_float_list_max_length(run_command):
    cmd = _cmd(FloatListType(max_length=1))
    run_command(cmd, ["--value", "0.1"])
    result = run_command(cmd, ["--value", "0.1,0.2"], exit_code=2)
    assert "at most 1 value(s)" in result.output


def test_float_list_allows_nonpositive_when_asked(run_command):
    result = run_command(_cmd(FloatListType(positive=False)), ["--value=-1,0"])
    assert result.output.strip() == "(-1.0, 0.0)"


def test_phase_method_type(run_command):
    cmd = _cmd(PhaseMethodType())
    result = run_command(cmd, ["--value", "simpson:3"])
    assert "simpson" in result.output
    assert "panels=3" in result.output
    result = run_command(cmd, ["--value", "trapezoid"], exit_code=2)
    assert "not a phase method" in result.output


def test_potential_builtin(run_command):
    result = run_command(_cmd(PotentialType()), ["--value", "PCF-Quadratic"])
    assert "pcf-quadratic" in result.output


def test_potential_file(run_command, potential_file):
    path = potential_file("tilted_linear.cfg")
    result = run_command(_cmd(PotentialType()), ["--value", f"file:{path}"])
    assert f"file:{path}" in result.output


@pytest.mark.parametrize("arg", ["harmonic", "file:", "file:/no/such/file.cfg"])
def test_potential_rejects(run_command, arg):
    run_command(_cmd(PotentialType()), ["--value", arg], exit_code=2)


def test_selector_build(potential_file):
    assert PotentialSelector("airy-linear").build().x1 == 0.1
    assert PotentialSelector("pcf-quadratic").build(0.05).x1 == 0.05

    from turnwkb.config import load_potential

    path = potential_file("tilted_linear.cfg")
    selector = PotentialSelector(f"file:{path}", load_potential(path))
    assert selector.build() is selector.coefficient
    moved = selector.build(0.2)
    assert moved.x1 == 0.2
    assert moved.body == selector.coefficient.body
