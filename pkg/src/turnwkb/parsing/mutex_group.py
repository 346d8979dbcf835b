import functools

import click


def _param_name(option: str) -> str:
    return option.lstrip("-").replace("-", "_")


def _join(options) -> str:
    if len(options) == 2:
        return "{} and {}".format(*options)
    return ", ".join(options[:-1]) + f", and {options[-1]}"


def mutex_option_group(*options: str):
    """
    Allow at most one of the named options, e.g. ``--potential`` and
    ``--config-potential``. An option counts as given when its value is
    neither None nor falsy, so unset flags and zero counts are ignored.
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapped(*args, **kwargs):
            given = [opt for opt in options if kwargs.get(_param_name(opt))]
            if len(given) > 1:
                raise click.UsageError(f"{_join(options)} are mutually exclusive")
            return func(*args, **kwargs)

        return wrapped

    return decorator
