"""Second-moment dynamics of two cavities bridged by a lossy mechanical mode.

The mode vector is ``psi = (a1, a1+, a2, a2+, b, b+)``: cavity 1 couples to
the mechanics through a downconversion term of strength ``g1``, cavity 2
through a beam-splitter term of strength ``g2``, and the mechanical mode
relaxes at ``gamma_m`` towards thermal occupation ``n_th``.  The ordered
second moments ``Phi_ij = <psi_i psi_j>`` then obey the closed linear flow

    dPhi/dt = A Phi + Phi A^T + 2 K D,

with ``A`` the complex drift matrix, ``K`` the diagonal damping matrix and
``D`` the input-noise correlation matrix.  The steady state solves the
continuous Lyapunov equation ``A Phi + Phi A^T + 2 K D = 0``.

Note the transpose in the flow: with a complex ``A`` this is *not* the
conjugate-transpose Lyapunov equation standard solvers expect, which is why
the steady state is computed on the Kronecker-vectorized form instead.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import lu_factor, lu_solve

from .errors import (
    NumericalError,
    PartialResultWarning,
    StepConvergenceError,
    UnstableSystemError,
)
from .params import SystemParams

__all__ = [
    "Generators",
    "StabilityReport",
    "RwaReport",
    "MomentState",
    "ClosedFormMoments",
    "build_generators",
    "stability_margins",
    "assess_stability",
    "assess_rwa",
    "vacuum_thermal_state",
    "build_moment_state",
    "steady_state_lyapunov",
    "steady_state_closed_form",
    "evolve_moments",
    "to_correlation_matrix",
]

#: index of the conjugate partner of each mode-vector component
_SWAP = np.array([1, 0, 3, 2, 5, 4])


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Generators:
    """Matrices (A, K, D) defining the moment flow of one parameter set."""

    drift: NDArray        # A: complex 6x6
    damping: NDArray      # K: real diagonal 6x6
    diffusion: NDArray    # D: real 6x6 input-noise correlations

    @property
    def noise(self) -> NDArray:
        """The inhomogeneous term 2 K D of the moment flow."""
        return 2.0 * self.damping @ self.diffusion


def build_generators(params: SystemParams) -> Generators:
    """Assemble drift, damping and diffusion matrices for ``params``.

    The drift acts on ``psi = (a1, a1+, a2, a2+, b, b+)``; its only
    off-diagonal entries are the +/- i g couplings between each cavity
    quadrature pair and the mechanical one.
    """
    k1, k2 = params.kappa1, params.kappa2
    g1, g2, gm = params.g1, params.g2, params.gamma_m

    a = np.zeros((6, 6), dtype=complex)
    a[0, 0] = -k1
    a[0, 5] = -1j * g1
    a[1, 1] = -k1
    a[1, 4] = 1j * g1
    a[2, 2] = -k2
    a[2, 4] = -1j * g2
    a[3, 3] = -k2
    a[3, 5] = 1j * g2
    a[4, 4] = -gm
    a[4, 1] = -1j * g1
    a[4, 2] = -1j * g2
    a[5, 5] = -gm
    a[5, 0] = 1j * g1
    a[5, 3] = 1j * g2

    k = np.diag([k1, k1, k2, k2, gm, gm]).astype(float)

    d = np.zeros((6, 6))
    d[0, 1] = 1.0
    d[2, 3] = 1.0
    d[4, 5] = params.n_th + 1.0
    d[5, 4] = params.n_th
    return Generators(drift=a, damping=k, diffusion=d)


# ---------------------------------------------------------------------------
# stability and regime sanity checks


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of the closed-form and spectral stability tests.

    ``analytic_pass`` evaluates the two closed-form inequalities that are
    necessary and sufficient for this model; ``spectral_pass`` checks that
    every drift eigenvalue has a strictly negative real part.  The two can
    disagree only on numerical boundary cases, which is reported rather
    than raised.
    """

    analytic_pass: bool
    spectral_pass: bool
    max_real_eigenvalue: float

    @property
    def consistent(self) -> bool:
        return self.analytic_pass == self.spectral_pass


def stability_margins(params: SystemParams) -> tuple[float, float]:
    """Left-minus-right margins of the two closed-form stability conditions.

    Both must be strictly positive for stability.
    """
    k1, k2 = params.kappa1, params.kappa2
    g1, g2, gm = params.g1, params.g2, params.gamma_m
    m1 = (k2 + gm) * ((k1 + k2) * (k1 + gm) + g2**2) - (k1 + gm) * g1**2
    m2 = k1 * g2**2 - k2 * g1**2 + gm * k1 * k2
    return m1, m2


def assess_stability(params: SystemParams) -> StabilityReport:
    """Evaluate closed-form and spectral stability for ``params``."""
    m1, m2 = stability_margins(params)
    eigs = np.linalg.eigvals(build_generators(params).drift)
    max_re = float(eigs.real.max())
    return StabilityReport(
        analytic_pass=bool(m1 > 0.0 and m2 > 0.0),
        spectral_pass=bool(max_re < 0.0),
        max_real_eigenvalue=max_re,
    )


@dataclass(frozen=True)
class RwaReport:
    """Rotating-wave sanity check: omega_m against every competing rate.

    ``checks`` maps each rate name to ``(value, passes)`` where passing
    means ``omega_m >= margin_factor * value``. ``ratio`` is omega_m over
    the largest competing rate. When ``omega_m`` is not given the check is
    not assessable and all verdict fields are None.
    """

    assessable: bool
    margin_factor: float
    checks: dict[str, tuple[float, bool]]
    ratio: float | None
    overall: bool | None


def assess_rwa(params: SystemParams, margin_factor: float = 10.0) -> RwaReport:
    """Check that omega_m dominates g1, g2, kappa1, kappa2 and gamma_m*n_th."""
    if params.omega_m is None:
        return RwaReport(False, margin_factor, {}, None, None)
    rates = {
        "g1": params.g1,
        "g2": params.g2,
        "kappa1": params.kappa1,
        "kappa2": params.kappa2,
        "gamma_m*n_th": params.gamma_m * params.n_th,
    }
    checks = {
        name: (value, bool(params.omega_m >= margin_factor * value))
        for name, value in rates.items()
    }
    largest = max(rates.values())
    ratio = math.inf if largest == 0.0 else params.omega_m / largest
    overall = all(ok for _, ok in checks.values())
    return RwaReport(True, margin_factor, checks, ratio, overall)


# ---------------------------------------------------------------------------
# moment states


@dataclass(frozen=True)
class MomentState:
    """All ordered second moments of the three-mode state.

    ``phi[i, j] = <psi_i psi_j>`` in the basis (a1, a1+, a2, a2+, b, b+).
    Scalar views below are re-read from the matrix on access, so they always
    reflect the stored moments.
    """

    phi: NDArray

    @property
    def n1(self) -> float:
        """Cavity-1 occupation <a1+ a1>."""
        return float(self.phi[1, 0].real)

    @property
    def n2(self) -> float:
        """Cavity-2 occupation <a2+ a2>."""
        return float(self.phi[3, 2].real)

    @property
    def nm(self) -> float:
        """Mechanical occupation <b+ b>."""
        return float(self.phi[5, 4].real)

    @property
    def c(self) -> complex:
        """Two-cavity pairing moment <a1 a2>."""
        return complex(self.phi[0, 2])

    @property
    def d1(self) -> complex:
        """Single-cavity pairing moment <a1 a1> (zero by phase symmetry)."""
        return complex(self.phi[0, 0])

    @property
    def d2(self) -> complex:
        """Single-cavity pairing moment <a2 a2> (zero by phase symmetry)."""
        return complex(self.phi[2, 2])

    @property
    def x12(self) -> complex:
        """Photon-exchange moment <a1 a2+> (zero by phase symmetry)."""
        return complex(self.phi[0, 3])

    def conjugation_defect(self) -> float:
        """Max deviation from the self-conjugacy Phi* = S Phi^T S.

        ``S`` swaps each operator with its conjugate; the flow preserves
        this structure exactly, so the defect measures accumulated numeric
        error (it also vanishes for any valid moment matrix).
        """
        mirrored = self.phi.T[np.ix_(_SWAP, _SWAP)]
        return float(np.abs(np.conj(self.phi) - mirrored).max())


def vacuum_thermal_state(n_th: float = 0.0) -> MomentState:
    """Both cavities in vacuum, mechanics thermal at ``n_th``."""
    phi = np.zeros((6, 6), dtype=complex)
    phi[0, 1] = 1.0
    phi[2, 3] = 1.0
    phi[4, 5] = n_th + 1.0
    phi[5, 4] = n_th
    return MomentState(phi)


def build_moment_state(
    n1: float = 0.0,
    n2: float = 0.0,
    nm: float = 0.0,
    c: complex = 0.0,
    pair_1m: complex = 0.0,
    pair_2m: complex = 0.0,
) -> MomentState:
    """Moment matrix with the phase-symmetric sparsity pattern.

    Only the moments that survive the joint phase rotation
    (a1, a2, b) -> (e^{i phi} a1, e^{-i phi} a2, e^{-i phi} b) can be set:
    occupations, ``c = <a1 a2>``, ``pair_1m = <a1 b>`` and
    ``pair_2m = <a2 b+>``.  All remaining entries are fixed by commutators
    and conjugation.
    """
    phi = np.zeros((6, 6), dtype=complex)
    phi[1, 0] = n1
    phi[0, 1] = n1 + 1.0
    phi[3, 2] = n2
    phi[2, 3] = n2 + 1.0
    phi[5, 4] = nm
    phi[4, 5] = nm + 1.0
    phi[0, 2] = phi[2, 0] = c
    phi[1, 3] = phi[3, 1] = np.conj(c)
    phi[0, 4] = phi[4, 0] = pair_1m
    phi[1, 5] = phi[5, 1] = np.conj(pair_1m)
    phi[2, 5] = phi[5, 2] = pair_2m
    phi[3, 4] = phi[4, 3] = np.conj(pair_2m)
    return MomentState(phi)


# ---------------------------------------------------------------------------
# steady states


def steady_state_lyapunov(params: SystemParams) -> MomentState:
    """Steady second moments from the Lyapunov equation A Phi + Phi A^T = -2KD.

    The equation is vectorized with Kronecker products (transpose, not
    conjugate-transpose, so standard Lyapunov solvers do not apply) and
    solved by dense LU with one iterative-refinement pass.  The result is
    rejected unless the residual satisfies
    ``||A Phi + Phi A^T + 2KD||_F <= 1e-10 ||2KD||_F``.

    Raises
    ------
    UnstableSystemError
        If the drift spectrum is not strictly in the left half-plane.
    NumericalError
        If the residual bound cannot be met.
    """
    report = assess_stability(params)
    if not report.spectral_pass:
        raise UnstableSystemError(report)
    gen = build_generators(params)
    a = gen.drift
    q = gen.noise.astype(complex).reshape(-1)
    eye = np.eye(6)
    lhs = np.kron(a, eye) + np.kron(eye, a)
    lu = lu_factor(lhs)
    x = lu_solve(lu, -q)
    bound = 1e-10 * float(np.linalg.norm(q))
    residual = float(np.linalg.norm(lhs @ x + q))
    # iterative refinement keeps small moments accurate and rescues
    # ill-conditioned near-boundary systems; stop once it stagnates
    for _ in range(10):
        if residual <= bound:
            break
        refined = x - lu_solve(lu, lhs @ x + q)
        refined_residual = float(np.linalg.norm(lhs @ refined + q))
        if refined_residual >= residual:
            break
        x, residual = refined, refined_residual
    if residual > bound:
        raise NumericalError(
            f"Lyapunov residual {residual:.3e} exceeds bound {bound:.3e}"
        )
    return MomentState(x.reshape(6, 6))


@dataclass(frozen=True)
class ClosedFormMoments:
    """Closed-form steady occupations and, when available, the pairing moment.

    ``c`` is None for a thermal mechanical bath (n_th > 0), where no
    validated closed form for <a1 a2> exists; the Lyapunov solution covers
    that case.
    """

    n1: float
    n2: float
    c: float | None


def steady_state_closed_form(params: SystemParams) -> ClosedFormMoments:
    """Explicit rational expressions for the steady moments.

    Exact for the occupations at any bath temperature and for the pairing
    moment at ``n_th = 0``; emits :class:`PartialResultWarning` and returns
    ``c=None`` otherwise.  Requires the closed-form stability conditions to
    hold (they are exactly the positivity of the two denominator factors).
    """
    report = assess_stability(params)
    if not report.analytic_pass:
        raise UnstableSystemError(report)
    k1, k2 = params.kappa1, params.kappa2
    g1, g2, gm, nth = params.g1, params.g2, params.gamma_m, params.n_th

    den1 = k1 * g2**2 - k2 * g1**2 + gm * k1 * k2
    den2 = (
        (k2 + gm) * g2**2
        - (k1 + gm) * g1**2
        + (k1 + k2) * (k1 + gm) * (k2 + gm)
    )
    den = den1 * den2

    n1 = (
        k2 * (k1 + k2 + gm) * g1**2 * g2**2
        + gm * (nth + 1.0)
        * (k1 * g2**2 - k2 * g1**2 + k2 * (k1 + k2) * (k2 + gm))
        * g1**2
    ) / den
    n2 = (
        k1 * (k1 + k2 + gm) * g1**2 * g2**2
        + gm * nth
        * (k1 * g2**2 - k2 * g1**2 + k1 * (k1 + k2) * (k1 + gm))
        * g2**2
    ) / den

    if nth == 0.0:
        c = -(k1 * g1 * g2 * (k2 * g1**2 + (k2 + gm) * (g2**2 + k2 * gm))) / den
    else:
        warnings.warn(
            "no validated closed form for <a1 a2> at n_th > 0; returning "
            "c=None (use steady_state_lyapunov for the full moments)",
            PartialResultWarning,
            stacklevel=2,
        )
        c = None
    return ClosedFormMoments(n1=n1, n2=n2, c=c)


# ---------------------------------------------------------------------------
# time evolution


def _rk4_step_map(lhs: NDArray, q: NDArray, h: float) -> tuple[NDArray, NDArray]:
    """One classical RK4 step of x' = L x + q as the affine map x -> R x + s."""
    p = h * lhs
    p2 = p @ p
    p3 = p2 @ p
    p4 = p3 @ p
    eye = np.eye(lhs.shape[0])
    r = eye + p + p2 / 2.0 + p3 / 6.0 + p4 / 24.0
    s = h * (q + (p @ q) / 2.0 + (p2 @ q) / 6.0 + (p3 @ q) / 24.0)
    return r, s


def _affine_power(r: NDArray, s: NDArray, n: int) -> tuple[NDArray, NDArray]:
    """n-fold self-composition of the affine map x -> R x + s, by doubling.

    Mathematically identical to applying the map n times in sequence, so the
    fixed point (the steady state for a stable step map) is untouched, at
    O(log n) matrix products.
    """
    acc_r = np.eye(r.shape[0], dtype=r.dtype)
    acc_s = np.zeros_like(s)
    base_r, base_s = r, s
    while n:
        if n & 1:
            acc_s = base_r @ acc_s + base_s
            acc_r = base_r @ acc_r
        n >>= 1
        if n:
            base_s = base_r @ base_s + base_s
            base_r = base_r @ base_r
    return acc_r, acc_s


def _propagate(
    lhs: NDArray, q: NDArray, phi0: NDArray, times: NDArray, h: float
) -> list[NDArray]:
    """Moments at the requested times for base step ``h`` (one RK4 family)."""
    out = []
    x = phi0.reshape(-1).astype(complex)
    t = 0.0
    for tk in times:
        dt = tk - t
        if dt > 0.0:
            n = max(1, math.ceil(dt / h - 1e-12))
            r, s = _rk4_step_map(lhs, q, dt / n)
            pow_r, pow_s = _affine_power(r, s, n)
            x = pow_r @ x + pow_s
            t = tk
        out.append(x.reshape(6, 6).copy())
    return out


def evolve_moments(
    params: SystemParams,
    initial: MomentState,
    times,
    *,
    tol: float = 1e-8,
    max_halvings: int = 30,
) -> list[MomentState]:
    """Integrate the moment flow from ``initial``, reporting at ``times``.

    Classical fixed-step RK4 on the vectorized flow, with the step refined
    by halving until the largest moment change between two consecutive
    refinement levels is below ``tol`` (max over entries and report times,
    measured relative to the largest moment magnitude when that exceeds
    one, absolute otherwise); the finer result is returned.  The starting
    step sits at the edge of the RK4 stability region — starting smaller
    would not help, because over long horizons the doubling scheme's
    rounding noise grows with the step count while the halving loop
    already controls truncation.

    Raises
    ------
    StepConvergenceError
        If refinement does not settle within ``max_halvings`` levels.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a non-empty 1-D sequence")
    if times[0] < 0.0 or np.any(np.diff(times) <= 0.0):
        raise ValueError("times must be non-negative and strictly increasing")

    gen = build_generators(params)
    a = gen.drift
    q = gen.noise.astype(complex).reshape(-1)
    eye = np.eye(6)
    lhs = np.kron(a, eye) + np.kron(eye, a)

    eigs = np.linalg.eigvals(a)
    spread = 2.0 * float(np.abs(eigs).max())  # flow eigenvalues live in 2*spec(A)
    h = 2.5 / max(spread, 1e-30)

    previous = None
    diff = math.inf
    for halving in range(max_halvings + 1):
        states = _propagate(lhs, q, initial.phi, times, h)
        if previous is not None:
            diff = max(
                float(np.abs(new - old).max())
                for new, old in zip(states, previous)
            )
            scale = max(float(np.abs(phi).max()) for phi in states)
            if diff < tol * max(1.0, scale):
                return [MomentState(phi) for phi in states]
        previous = states
        h /= 2.0
    raise StepConvergenceError(step=h * 2.0, max_difference=diff, halvings=max_halvings)


def to_correlation_matrix(moments: MomentState) -> NDArray:
    """Two-cavity quadrature covariance (vacuum variance 1/2) of ``moments``.

    Uses the phase-symmetric structure: diagonal blocks ``(n_j + 1/2) I``
    and a cross block ``diag(c, -c)``.  A complex pairing moment enters
    through its modulus, which matches rotating one cavity's quadratures to
    the frame where the cross block is diagonal.
    """
    c = moments.c
    c_eff = c.real if abs(c.imag) <= 1e-12 * max(1.0, abs(c)) else abs(c)
    sigma = np.diag([
        moments.n1 + 0.5,
        moments.n1 + 0.5,
        moments.n2 + 0.5,
        moments.n2 + 0.5,
    ])
    sigma[0, 2] = sigma[2, 0] = c_eff
    sigma[1, 3] = sigma[3, 1] = -c_eff
    return sigma
