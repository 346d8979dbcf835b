import logging
import os
import shlex

import pytest
from click.testing import CliRunner
from ruamel.yaml import YAML

yaml = YAML(typ="safe")
log = logging.getLogger(__name__)


@pytest.fixture(scope="session")
def test_file_dir():
    return os.path.normpath(os.path.join(os.path.dirname(__file__), "files"))


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Never read the developer's ~/.turnwkb.cfg during tests."""
    import turnwkb.config

    monkeypatch.setattr(
        turnwkb.config, "TURNWKB_CONFIG", str(tmp_path / "turnwkb.cfg")
    )


@pytest.fixture
def write_config(tmp_path):
    def func(text):
        path = tmp_path / "turnwkb.cfg"
        path.write_text(text)
        return str(path)

    return func


@pytest.fixture
def load_reference(test_file_dir):
    def func(filename):
        with open(os.path.join(test_file_dir, "reference", filename)) as fp:
            return yaml.load(fp)

    return func


@pytest.fixture
def potential_file(test_file_dir):
    def func(filename):
        return os.path.join(test_file_dir, "potentials", filename)

    return func


@pytest.fixture
def cli_runner():
    # stderr is kept separate by default on newer click releases
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def run_line(cli_runner):
    """
    Uses the CliRunner to run the given command line.

    Asserts that the exit_code is equal to the given assert_exit_code,
    and if that exit_code is 0 prevents click from catching exceptions
    for easier debugging.
    """

    def func(line, assert_exit_code=0, stdin=None):
        from turnwkb import main

        # split line into args and confirm line starts with "turnwkb"
        args = shlex.split(line)
        assert args[0] == "turnwkb"

        result = cli_runner.invoke(
            main, args[1:], input=stdin, catch_exceptions=bool(assert_exit_code)
        )
        if result.exit_code != assert_exit_code:
            raise Exception(
                (
                    "CliTest run_line exit_code assertion failed!\n"
                    "Line:\n{}\nexited with {} when expecting {}\n"
                    "stdout:\n{}\nstderr:\n{}"
                ).format(
                    line,
                    result.exit_code,
                    assert_exit_code,
                    result.stdout,
                    result.stderr,
                )
            )
        return result

    return func
