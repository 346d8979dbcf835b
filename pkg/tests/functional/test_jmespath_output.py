import json


def test_jmespath_selects_from_the_document(run_line):
    result = run_line(
        "turnwkb solve --eps 2^-5 --h 0.01 --jmespath 'header.kind'"
    )
    assert json.loads(result.output) == "airy"


def test_jmespath_forces_json(run_line):
    result = run_line(
        "turnwkb solve --eps 2^-5 --h 0.01 -F text --jq 'header.[eps, h]'"
    )
    assert json.loads(result.output) == [2.0 ** -5, 0.01]


def test_jmespath_on_rows(run_line):
    result = run_line(
        "turnwkb solve --eps 2^-5 --h 0.1 --jq 'rows[-1].x'"
    )
    assert json.loads(result.output) == 1.0


def test_invalid_jmespath(run_line):
    result = run_line("turnwkb solve --jq 'rows[.'", assert_exit_code=2)
    assert "Invalid value for '--jmespath'" in result.stderr
