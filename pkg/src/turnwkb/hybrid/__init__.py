from turnwkb.hybrid.matching import (
    AIRY_LINEAR,
    PCF_QUADRATIC,
    AnalyticPiece,
    TwoPieceSolution,
    match_two_piece,
)
from turnwkb.hybrid.reference import (
    ErrorRecord,
    ExactSolution,
    error_record,
    exact_airy,
    exact_for,
    exact_pcf,
    solution_errors,
)
from turnwkb.hybrid.samplers import AirySampler, PcfSampler, sampler_for
from turnwkb.hybrid.solution import (
    BcResiduals,
    HybridSolution,
    observables,
    scale_to_transparent,
    solve,
    solve_airy,
    solve_pcf,
)

__all__ = [
    "AIRY_LINEAR",
    "PCF_QUADRATIC",
    "AnalyticPiece",
    "TwoPieceSolution",
    "match_two_piece",
    "ErrorRecord",
    "ExactSolution",
    "error_record",
    "exact_airy",
    "exact_for",
    "exact_pcf",
    "solution_errors",
    "AirySampler",
    "PcfSampler",
    "sampler_for",
    "BcResiduals",
    "HybridSolution",
    "observables",
    "scale_to_transparent",
    "solve",
    "solve_airy",
    "solve_pcf",
]
