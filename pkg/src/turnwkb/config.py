import dataclasses
import logging.config
import os
from configparser import ConfigParser

from turnwkb.exc import AssumptionError

log = logging.getLogger(__name__)

TURNWKB_CONFIG = os.environ.get("TURNWKB_CONFIG")


def setup_logging(level="DEBUG"):
    conf = {
        "version": 1,
        "formatters": {
            "basic": {"format": "[%(levelname)s] %(name)s::%(funcName)s() %(message)s"}
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "basic",
            }
        },
        "loggers": {"turnwkb": {"level": level, "handlers": ["console"]}},
    }

    logging.config.dictConfig(conf)


@dataclasses.dataclass(frozen=True)
class NumericsSettings:
    # hard ceiling on decimal digits for the parabolic cylinder series
    pcf_max_digits: int = 25000
    # sup-norm sampling on [0, x1]
    sup_samples: int = 2000
    pcf_sup_samples: int = 200
    jobs: int = 1


def _get_conf_path():
    return os.path.expanduser(TURNWKB_CONFIG or "~/.turnwkb.cfg")


def _conf_parser(path=None):
    conf = ConfigParser()
    conf.read(path or _get_conf_path())
    return conf


def get_settings(path=None, **overrides) -> NumericsSettings:
    """
    Read the [numerics] section of the user config file, falling back to
    defaults for anything missing. Keyword overrides which are not None (e.g.
    a --jobs flag) take precedence over the file.
    """
    overrides = {k: v for k, v in overrides.items() if v is not None}
    conf = _conf_parser(path)
    defaults = NumericsSettings()
    if not conf.has_section("numerics"):
        return dataclasses.replace(defaults, **overrides)

    section = conf["numerics"]
    settings = NumericsSettings(
        pcf_max_digits=section.getint("pcf_max_digits", defaults.pcf_max_digits),
        sup_samples=section.getint("sup_samples", defaults.sup_samples),
        pcf_sup_samples=section.getint("pcf_sup_samples", defaults.pcf_sup_samples),
        jobs=section.getint("jobs", defaults.jobs),
    )
    settings = dataclasses.replace(settings, **overrides)
    log.debug("loaded numerics settings %s", settings)
    return settings


def _parse_float_list(raw):
    return [float(x) for x in (y.strip() for y in raw.split(",")) if len(x)]


def load_potential(path):
    """
    Load a user potential from an INI file with a [potential] section, e.g.

        [potential]
        region = quadratic
        x1 = 0.1
        k1 = -0.5
        k2 = 1.0
        body = 0.0, 1.0, -0.5

    ``body`` lists the polynomial coefficients of a(x) on [x1, 1] in ascending
    order. Raises AssumptionError on a malformed file.
    """
    from turnwkb.coefficient import from_polynomial

    conf = ConfigParser()
    if not conf.read(path):
        raise AssumptionError([f"potential file {path} could not be read"])
    if not conf.has_section("potential"):
        raise AssumptionError([f"potential file {path} has no [potential] section"])

    section = conf["potential"]
    try:
        region = section.get("region", "linear").strip().lower()
        x1 = section.getfloat("x1")
        body = _parse_float_list(section.get("body", ""))
        k1 = section.getfloat("k1", fallback=None)
        k2 = section.getfloat("k2", fallback=None)
    except ValueError as err:
        raise AssumptionError([f"potential file {path}: {err}"])

    if x1 is None:
        raise AssumptionError([f"potential file {path} does not set x1"])
    if not body:
        raise AssumptionError([f"potential file {path} does not set body"])

    log.debug("loaded potential region=%s x1=%s body=%s", region, x1, body)
    return from_polynomial(region, x1, body, k1=k1, k2=k2)
