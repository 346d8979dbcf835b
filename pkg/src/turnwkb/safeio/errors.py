import dataclasses
import json

import click

from turnwkb.safeio.get_option_vals import outformat_is_json

TEXT_PREFIX = "turnwkb error:"


@dataclasses.dataclass(frozen=True)
class PrintableErrorField:
    """One name/value line of an error report; values are shown as str."""

    TEXT_PREFIX = TEXT_PREFIX

    name: str
    value: object
    multiline: bool = False

    @property
    def raw_value(self) -> str:
        return str(self.value)

    def render(self) -> str:
        label = f"{self.name}:".ljust(len(TEXT_PREFIX))
        lines = self.raw_value.split("\n")
        if not self.multiline or len(lines) == 1:
            return f"{label} {self.raw_value}"
        indent = " " * (len(TEXT_PREFIX) + 1)
        # one assumption failure (or message line) per row
        return f"{self.name}:\n" + "\n".join(indent + line for line in lines)


def _json_report(error_name, fields):
    report = {f.name: f.raw_value for f in fields}
    report["error_name"] = error_name
    return json.dumps(report, indent=2, separators=(",", ": "), sort_keys=True)


def write_error_info(error_name, fields, message=None):
    """
    Report an error on stderr: a JSON object under --format json, otherwise
    ``message`` or the field listing under a headline.
    """
    if outformat_is_json():
        text = click.style(_json_report(error_name, fields), fg="yellow")
    elif message:
        text = message
    else:
        article = "An" if error_name[0] in "AEIOUaeiou" else "A"
        headline = click.style(error_name, bold=True, fg="red")
        body = click.style("\n".join(f.render() for f in fields), fg="yellow")
        text = f"{TEXT_PREFIX} {article} {headline} Occurred.\n{body}"
    click.echo(text, err=True)
