from turnwkb.parsing.command_decorators import command, main_group
from turnwkb.parsing.float_list import FloatListType, parse_float
from turnwkb.parsing.mutex_group import mutex_option_group
from turnwkb.parsing.phase_method_type import PhaseMethodType
from turnwkb.parsing.potential_type import PotentialSelector, PotentialType
from turnwkb.parsing.shared_options import (
    eps_option,
    h_option,
    jobs_option,
    out_option,
    phase_option,
    potential_options,
    repeats_option,
)

__all__ = [
    # replacement decorators
    "command",
    "main_group",
    # param types
    "FloatListType",
    "PhaseMethodType",
    "PotentialType",
    "PotentialSelector",
    "parse_float",
    "mutex_option_group",
    # numerics options
    "potential_options",
    "eps_option",
    "h_option",
    "phase_option",
    "out_option",
    "repeats_option",
    "jobs_option",
]
