from turnwkb.safeio.errors import PrintableErrorField, write_error_info
from turnwkb.safeio.get_option_vals import (
    get_jmespath_expression,
    outformat_is_csv,
    outformat_is_json,
    verbosity,
)
from turnwkb.safeio.output_formatter import (
    FORMAT_TEXT_RECORD,
    FORMAT_TEXT_TABLE,
    FormatField,
    colon_formatted_print,
    formatted_print,
    print_table,
    print_titled_table,
)

__all__ = [
    "PrintableErrorField",
    "write_error_info",
    "formatted_print",
    "colon_formatted_print",
    "print_table",
    "print_titled_table",
    "FormatField",
    "FORMAT_TEXT_TABLE",
    "FORMAT_TEXT_RECORD",
    "outformat_is_json",
    "outformat_is_csv",
    "get_jmespath_expression",
    "verbosity",
]
