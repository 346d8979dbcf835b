import csv
import json
import logging
import sys

import click
import numpy as np

from turnwkb.safeio.get_option_vals import (
    get_jmespath_expression,
    outformat_is_csv,
    outformat_is_json,
)

log = logging.getLogger(__name__)

__all__ = ("formatted_print", "FormatField", "FORMAT_TEXT_TABLE", "FORMAT_TEXT_RECORD")

FORMAT_TEXT_TABLE = "text_table"
FORMAT_TEXT_RECORD = "text_record"


class FormatField:
    """A column of table or CSV output, or a line of record output.

    :param name: the column (or record field) name; CSV headers use it as is
    :param key: a str for indexing into print data or a callable which
        produces a value given the print data
    """

    def __init__(self, name, key=None):
        self.name = name
        self.keyfunc = _key_to_keyfunc(name if key is None else key)

    @classmethod
    def coerce(cls, rawfield):
        """given a (FormatField|tuple|str), convert to a FormatField"""
        if isinstance(rawfield, cls):
            return rawfield
        elif isinstance(rawfield, str):
            return cls(rawfield)
        elif isinstance(rawfield, tuple):
            if len(rawfield) == 2:
                return cls(rawfield[0], rawfield[1])
            raise ValueError("cannot coerce tuple of bad length")
        raise TypeError(
            "FormatField.coerce must be given a field, str or tuple, "
            "got {}".format(type(rawfield))
        )

    def __call__(self, data):
        return self.keyfunc(data)


def _key_to_keyfunc(k):
    if isinstance(k, str):

        def lookup(x):
            return x[k]

        return lookup
    return k


def _text_value(val):
    if val is None:
        return "NULL"
    if isinstance(val, (float, np.floating)):
        return f"{val:.4e}"
    return str(val)


def _json_default(obj):
    # numpy scalars and arrays leak out of the numerics
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def _jmespath_preprocess(res):
    jmespath_expr = get_jmespath_expression()
    if jmespath_expr is not None and not isinstance(res, str):
        # round-trip so that the expression sees plain JSON types
        res = jmespath_expr.search(json.loads(json.dumps(res, default=_json_default)))
    return res


def print_json_response(res, stream=None):
    res = _jmespath_preprocess(res)
    click.echo(
        json.dumps(
            res,
            indent=2,
            separators=(",", ": "),
            sort_keys=True,
            default=_json_default,
        ),
        file=stream,
    )


def print_csv_response(rows, fields, stream=None):
    """one header line of field names, then one line per row"""
    writer = csv.writer(stream or sys.stdout, lineterminator="\n")
    writer.writerow([f.name for f in fields])
    for row in rows:
        writer.writerow([_csv_value(f(row)) for f in fields])


def _csv_value(val):
    if isinstance(val, np.generic):
        return val.item()
    return "" if val is None else val


def colon_formatted_print(data, fields):
    fields = [FormatField.coerce(f) for f in fields]
    maxlen = max(len(f.name) for f in fields) + 2
    for field in fields:
        value = _text_value(field(data))
        click.echo("{}{}".format((field.name + ":").ljust(maxlen), value))


def print_table(iterable, fields):
    # walk the iterable once
    iterable = list(iterable)
    fields = [FormatField.coerce(f) for f in fields]

    headers = [f.name for f in fields]
    cells = [[_text_value(f(i)) for f in fields] for i in iterable]

    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    format_str = " | ".join("{:" + str(w) + "}" for w in widths)

    click.echo(format_str.format(*headers))
    click.echo(format_str.format(*("-" * w for w in widths)))
    for row in cells:
        click.echo(format_str.format(*row))


def formatted_print(
    response_data,
    text_format=FORMAT_TEXT_TABLE,
    fields=None,
    response_key=None,
    out=None,
):
    """
    A generic output formatter.

    ``response_data`` is a dict (or list of dicts) of results; it is dumped
    whole as JSON.

    ``text_format`` is FORMAT_TEXT_TABLE, FORMAT_TEXT_RECORD or a callable
    which takes the (keyed) rows and does the printing itself.

    ``fields`` are FormatField objects, names, or (name, key) tuples. They
    are the table columns and the CSV columns.

    ``response_key`` selects the rows out of ``response_data`` for table and
    CSV output.

    ``out`` is a path. When given, the machine-readable form (JSON under
    --format json, CSV otherwise) is written there instead of stdout; text
    output still goes to stdout.
    """
    if fields:
        fields = [FormatField.coerce(f) for f in fields]
    rows = response_data if response_key is None else response_data[response_key]

    def _print_machine(stream=None):
        if outformat_is_json():
            print_json_response(response_data, stream)
            return
        if fields is None:
            raise ValueError("CSV output needs fields; use --format json instead")
        print_csv_response(rows, fields, stream)

    def _print_text():
        if callable(text_format):
            text_format(rows)
        elif text_format == FORMAT_TEXT_RECORD:
            colon_formatted_print(rows, fields)
        else:
            print_table(rows, fields)

    if out is not None:
        with click.open_file(out, "w", atomic=out != "-") as stream:
            _print_machine(stream)
        log.info("wrote %s output to %s", "json" if outformat_is_json() else "csv", out)
        if not (outformat_is_json() or outformat_is_csv()):
            _print_text()
    elif outformat_is_json() or outformat_is_csv():
        _print_machine()
    else:
        _print_text()


def print_titled_table(title, iterable, fields):
    click.echo(f"\n=== {title} ===\n")
    print_table(iterable, fields)
