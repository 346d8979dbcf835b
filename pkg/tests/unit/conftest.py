import pytest
from click.testing import CliRunner


@pytest.fixture
def runner():
    # output and error reports share one stream here
    return CliRunner()


@pytest.fixture
def run_command(runner):
    """invoke a bare click command and check its exit status"""

    def _run(cmd, args, exit_code=0):
        result = runner.invoke(cmd, args, catch_exceptions=exit_code != 0)
        assert result.exit_code == exit_code, (
            f"{cmd.name} {' '.join(args)} exited {result.exit_code}, "
            f"expected {exit_code}:\n{result.output}"
        )
        return result

    return _run
