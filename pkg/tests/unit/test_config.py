import pytest

from turnwkb.coefficient import LINEAR, QUADRATIC
from turnwkb.config import NumericsSettings, get_settings, load_potential
from turnwkb.exc import AssumptionError


def test_defaults_without_a_file():
    assert get_settings() == NumericsSettings()


def test_settings_from_file(write_config):
    write_config("[numerics]\npcf_max_digits = 500\njobs = 4\n")
    settings = get_settings()
    assert settings.pcf_max_digits == 500
    assert settings.jobs == 4
    assert settings.sup_samples == NumericsSettings().sup_samples


def test_overrides_win(write_config):
    write_config("[numerics]\njobs = 4\n")
    assert get_settings(jobs=2).jobs == 2
    assert get_settings(jobs=None).jobs == 4


def test_explicit_path(tmp_path):
    path = tmp_path / "other.cfg"
    path.write_text("[numerics]\nsup_samples = 10\n")
    assert get_settings(str(path)).sup_samples == 10


def test_load_builtin_shapes(potential_file):
    c = load_potential(potential_file("tilted_linear.cfg"))
    assert c.region_kind == LINEAR
    assert c.x1 == 0.1
    assert c.body.coeffs == (0.0025, 0.95, 0.25)

    c = load_potential(potential_file("reference_quadratic.cfg"))
    assert c.region_kind == QUADRATIC
    assert (c.k1, c.k2) == (-0.5, 1.0)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[other]\nx1 = 0.1\n", "no [potential] section"),
        ("[potential]\nbody = 0.0, 1.0\n", "does not set x1"),
        ("[potential]\nx1 = 0.1\n", "does not set body"),
        ("[potential]\nx1 = 0.1\nbody = 0.0, one\n", "potential file"),
        ("[potential]\nregion = cubic\nx1 = 0.1\nbody = 0.0, 1.0\n", "region"),
        ("[potential]\nregion = quadratic\nx1 = 0.1\nbody = 0.0, 1.0\n", "k1 and k2"),
    ],
)
def test_bad_potential_files(tmp_path, text, fragment):
    path = tmp_path / "bad.cfg"
    path.write_text(text)
    with pytest.raises(AssumptionError) as excinfo:
        load_potential(str(path))
    assert fragment in str(excinfo.value)


def test_missing_potential_file(tmp_path):
    with pytest.raises(AssumptionError):
        load_potential(str(tmp_path / "nope.cfg"))
