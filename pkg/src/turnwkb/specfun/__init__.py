from turnwkb.specfun.airy import (
    AIRY_ARGMAX,
    AIRY_CROSSOVER,
    AiryPair,
    airy,
    airy_bi,
    airy_oscillatory_leading,
    airy_scaled_ic,
)
from turnwkb.specfun.pcf import (
    DEFAULT_MAX_DIGITS,
    PcfParameters,
    ScaledPcfPair,
    h_mu_log,
    pcf_leading_form,
    pcf_parameters,
    pcf_scaled,
    pcf_scaled_ic,
    pcf_uniform_asymptotic,
    required_digits,
    scaled_pcfu,
)
from turnwkb.specfun.turning import TurningMaps, turning_maps, zeta

__all__ = [
    # Airy
    "AIRY_ARGMAX",
    "AIRY_CROSSOVER",
    "AiryPair",
    "airy",
    "airy_bi",
    "airy_oscillatory_leading",
    "airy_scaled_ic",
    # parabolic cylinder
    "DEFAULT_MAX_DIGITS",
    "PcfParameters",
    "ScaledPcfPair",
    "h_mu_log",
    "pcf_leading_form",
    "pcf_parameters",
    "pcf_scaled",
    "pcf_scaled_ic",
    "pcf_uniform_asymptotic",
    "required_digits",
    "scaled_pcfu",
    # turning point maps
    "TurningMaps",
    "turning_maps",
    "zeta",
]
