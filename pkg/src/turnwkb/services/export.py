import typing

import numpy as np

from turnwkb.hybrid import HybridSolution
from turnwkb.services.fitting import SlopeFit

SOLUTION_COLUMNS = (
    "x",
    "re_psi",
    "im_psi",
    "re_eps_dpsi",
    "im_eps_dpsi",
    "n",
    "j",
)


def solution_rows(
    sol: HybridSolution, samples: typing.Optional[np.ndarray] = None
) -> typing.List[typing.Dict[str, float]]:
    """analytic samples of [0, x1) followed by the grid nodes"""
    if samples is None:
        samples = sol.default_samples()
    samples = np.asarray(samples, dtype=float)
    samples = samples[samples < sol.x1]
    left_psi, left_dpsi = sol.analytic(samples)

    xs = np.concatenate([samples, sol.nodes])
    psi = np.concatenate([np.atleast_1d(left_psi), sol.psi])
    eps_dpsi = np.concatenate([np.atleast_1d(left_dpsi), sol.eps_dpsi])
    density = np.abs(psi) ** 2
    current = (np.conj(psi) * eps_dpsi).imag
    return [
        dict(
            zip(
                SOLUTION_COLUMNS,
                (
                    float(x),
                    float(p.real),
                    float(p.imag),
                    float(d.real),
                    float(d.imag),
                    float(n),
                    float(j),
                ),
            )
        )
        for x, p, d, n, j in zip(xs, psi, eps_dpsi, density, current)
    ]


def solution_header(sol: HybridSolution, h: float) -> typing.Dict[str, typing.Any]:
    residuals = sol.bc_residuals()
    return {
        "kind": sol.kind,
        "eps": sol.eps,
        "h": h,
        "x1": sol.x1,
        "phase": str(sol.phase_method),
        "alpha_re": sol.alpha.real,
        "alpha_im": sol.alpha.imag,
        "robin_residual": residuals.robin_left,
        "transparent_residual": residuals.transparent_right,
        "reflection_modulus": sol.reflection_modulus(),
    }


def fit_rows(
    fits: typing.Mapping[float, SlopeFit], key: str
) -> typing.List[typing.Dict[str, typing.Any]]:
    """one row per fitted group, labelled by the value held fixed"""
    return [dict({key: k}, **fit.to_row()) for k, fit in sorted(fits.items())]
