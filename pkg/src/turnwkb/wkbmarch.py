"""
Second-order WKB-marching on [x1, 1].

The scaled state W = (a^(1/4) psi, eps (a^(1/4) psi)' / sqrt(a)) is rotated into
the slowly varying frame Z = exp(-i Phi/eps) P W and stepped with

    Z_{n+1} = (I + A1_n + A2_n) Z_n

where A1_n, A2_n are built from beta, beta_0..beta_3 at both interval ends,
the reduced phases e^{-/+ 2i phi(x_n)/eps} and H1, H2 of 2 S_n / eps.
"""
import logging
import math
import typing

import numpy as np

from turnwkb.coefficient import BetaChain, Coefficient, beta_chain
from turnwkb.exc import DomainError, RealityError
from turnwkb.phase import PhaseTable

log = logging.getLogger(__name__)

SQRT_HALF = math.sqrt(0.5)
P = SQRT_HALF * np.array([[1j, 1.0], [1.0, 1j]])
P_INV = P.conj().T

# below this |y| the H-functions switch to their Taylor polynomials
H_TAYLOR_BAND = 1e-4
REALITY_TOL = 1e-8

Number = typing.Union[float, complex]


class WVector(typing.NamedTuple):
    w1: Number
    w2: Number


class MarchState(typing.NamedTuple):
    z: np.ndarray
    node_index: int


def _a_and_slope(c, x):
    derivs = c.derivatives(x, 1)
    a, slope = float(derivs[0][0]), float(derivs[1][0])
    if a <= 0:
        raise DomainError(f"a(x) <= 0 at x={x}")
    return a, slope


def w_from_psi(
    c: Coefficient, eps: float, x: float, psi: Number, eps_dpsi: Number
) -> WVector:
    a, slope = _a_and_slope(c, x)
    return WVector(
        a ** 0.25 * psi,
        eps / 4.0 * a ** -1.25 * slope * psi + a ** -0.25 * eps_dpsi,
    )


def psi_from_w(
    c: Coefficient, eps: float, x: float, w: WVector
) -> typing.Tuple[Number, Number]:
    a, slope = _a_and_slope(c, x)
    psi = w.w1 * a ** -0.25
    eps_dpsi = a ** 0.25 * w.w2 - eps * slope / (4.0 * a ** 1.25) * w.w1
    return psi, eps_dpsi


def z_init(w1: WVector) -> MarchState:
    """Z at x1, where phi(x1) = 0"""
    return MarchState(P @ np.array([w1.w1, w1.w2], dtype=complex), 0)


def h_functions(
    y: np.ndarray, eiy: np.ndarray
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """
    H1(y) = e^{iy} - 1 and H2(y) = e^{iy} - 1 - iy, with e^{iy} supplied
    by the caller. Small |y| uses the quartic Taylor polynomials.
    """
    y = np.asarray(y, dtype=float)
    small = np.abs(y) < H_TAYLOR_BAND
    y2 = y * y
    tail = -y2 / 2 - 1j * y2 * y / 6 + y2 * y2 / 24
    h1 = np.where(small, 1j * y + tail, eiy - 1.0)
    h2 = np.where(small, tail, eiy - 1.0 - 1j * y)
    return h1, h2


def step_matrices(
    table: PhaseTable, chain: BetaChain, eps: float
) -> typing.Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Entries (m11, m12, m21, m22) of I + A1_n + A2_n for every interval of
    the table. chain holds beta..beta_3 at the table's nodes.
    """
    beta, b0, b1, b2, b3 = (np.atleast_1d(v) for v in chain)
    em = np.exp(-2j * table.theta)
    ep = em.conj()
    em_n, em_p = em[:-1], em[1:]
    ep_n, ep_p = ep[:-1], ep[1:]
    b0n, b0p = b0[:-1], b0[1:]
    b1n, b1p = b1[:-1], b1[1:]
    b2p, b3p = b2[1:], b3[1:]

    y = 2.0 * table.increments / eps
    # e^{iy} from the reduced phases, consistent with em/ep
    eiy = ep_p * em_n
    h1_plus, h2_plus = h_functions(y, eiy)
    h1_minus, h2_minus = h_functions(-y, eiy.conj())

    e2, e3, e4, e5 = eps ** 2, eps ** 3, eps ** 4, eps ** 5
    m12 = (
        -1j * e2 * (b0n * em_n - b0p * em_p)
        + e3 * (b1p * em_p - b1n * em_n)
        - 1j * e4 * b2p * em_n * h1_minus
        - e5 * b3p * em_n * h2_minus
    )
    m21 = (
        -1j * e2 * (b0p * ep_p - b0n * ep_n)
        + e3 * (b1p * ep_p - b1n * ep_n)
        + 1j * e4 * b2p * ep_n * h1_plus
        - e5 * b3p * ep_n * h2_plus
    )

    dx = np.diff(table.nodes)
    avg = (beta[1:] * b0p + beta[:-1] * b0n) / 2.0
    drift = e3 * dx * avg
    product = e4 * b0n * b0p
    cross = e5 * b1p * (b0n - b0p)
    m11 = 1.0 - 1j * drift - product * h1_minus + 1j * cross * h2_minus
    m22 = 1.0 + 1j * drift - product * h1_plus - 1j * cross * h2_plus
    return m11, m12, m21, m22


def step(
    state: MarchState,
    table: PhaseTable,
    betas_n: BetaChain,
    betas_next: BetaChain,
    eps: float,
) -> MarchState:
    """advance one interval, from node n = state.node_index to n + 1"""
    n = state.node_index
    if n >= len(table) - 1:
        raise DomainError(f"cannot step past the last node (index {n})")
    local = PhaseTable(
        nodes=table.nodes[n : n + 2],
        increments=table.increments[n : n + 1],
        cumulative=table.cumulative[n : n + 2],
        theta=table.theta[n : n + 2],
        method=table.method,
        eps=table.eps,
    )
    chain = BetaChain(
        *(np.array([float(u), float(v)]) for u, v in zip(betas_n, betas_next))
    )
    m11, m12, m21, m22 = step_matrices(local, chain, eps)
    z1, z2 = state.z
    z = np.array([m11[0] * z1 + m12[0] * z2, m21[0] * z1 + m22[0] * z2])
    return MarchState(z, n + 1)


def w_back(state: MarchState, table: PhaseTable) -> WVector:
    """W_n = P^-1 diag(e^{i theta_n}, e^{-i theta_n}) Z_n, returned as reals"""
    theta = table.theta[state.node_index]
    rotation = np.array([np.exp(1j * theta), np.exp(-1j * theta)])
    w = P_INV @ (rotation * state.z)
    return _real_w(w, state.node_index)


def _real_w(w, node_index):
    norm = float(np.linalg.norm(w))
    residue = float(np.max(np.abs(w.imag)))
    if residue > REALITY_TOL * max(norm, np.finfo(float).tiny):
        raise RealityError(residue, norm, node_index)
    return WVector(float(w[0].real), float(w[1].real))


class MarchTrace(typing.NamedTuple):
    z: np.ndarray
    w: np.ndarray
    max_residue: float


def march(
    c: Coefficient, eps: float, table: PhaseTable, w_start: WVector
) -> MarchTrace:
    """
    March real initial data W(x1) across every node of the table and return
    Z_n and the back-transformed (real) W_n at all nodes.
    """
    chain = beta_chain(c, eps, table.nodes)
    m11, m12, m21, m22 = step_matrices(table, chain, eps)
    log.debug("marching %d intervals (eps=%g, %s)", len(m11), eps, table.method)

    count = len(table)
    z = np.empty((count, 2), dtype=complex)
    z1, z2 = z_init(w_start).z
    z[0] = z1, z2
    for n in range(count - 1):
        z1, z2 = (
            m11[n] * z1 + m12[n] * z2,
            m21[n] * z1 + m22[n] * z2,
        )
        z[n + 1] = z1, z2

    rotated = z * np.stack([np.exp(1j * table.theta), np.exp(-1j * table.theta)], 1)
    w = rotated @ P_INV.T
    norms = np.linalg.norm(w, axis=1)
    residues = np.max(np.abs(w.imag), axis=1)
    bad = residues > REALITY_TOL * np.maximum(norms, np.finfo(float).tiny)
    if np.any(bad):
        n = int(np.argmax(bad))
        raise RealityError(float(residues[n]), float(norms[n]), n)
    relative = residues / np.maximum(norms, np.finfo(float).tiny)
    return MarchTrace(z, w.real.copy(), float(np.max(relative)))
