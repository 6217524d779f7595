"""Shared test fixtures: independent oracles and random-model samplers.

The oracles deliberately avoid the code paths they check: the steady-state
and propagation oracles use an eigendecomposition of the drift instead of
the Kronecker/LU solver and the RK4 integrator, and the spectrum oracle
builds the full 6x6 scattering matrix instead of the adjugate-style
closed-form transfer entries.
"""
from __future__ import annotations

import numpy as np

from steerkit import SystemParams, assess_stability, build_generators

_SWAP = np.array([1, 0, 3, 2, 5, 4])


def lyapunov_oracle(params: SystemParams) -> np.ndarray:
    """Steady second moments via the drift eigenbasis."""
    gen = build_generators(params)
    lam, vec = np.linalg.eig(gen.drift)
    q = gen.noise.astype(complex)
    qt = np.linalg.solve(vec, np.linalg.solve(vec, q.T).T)
    psi = -qt / (lam[:, None] + lam[None, :])
    return vec @ psi @ vec.T


def evolve_oracle(params: SystemParams, phi0: np.ndarray, t: float) -> np.ndarray:
    """Propagated second moments via the drift eigenbasis."""
    gen = build_generators(params)
    lam, vec = np.linalg.eig(gen.drift)
    q = gen.noise.astype(complex)
    qt = np.linalg.solve(vec, np.linalg.solve(vec, q.T).T)
    phi_ss = vec @ (-qt / (lam[:, None] + lam[None, :])) @ vec.T
    y0 = np.linalg.solve(vec, np.linalg.solve(vec, (phi0 - phi_ss).T).T)
    decay = np.exp(lam * t)
    return vec @ (decay[:, None] * y0 * decay[None, :]) @ vec.T + phi_ss


def spectrum_oracle(params: SystemParams, omega: float):
    """(var_x1, var_x2, cross, n1_out, n2_out) via the scattering matrix."""
    gen = build_generators(params)
    sq = np.sqrt(2.0 * gen.damping)
    diff = gen.diffusion

    def coeff(row: int, w: float) -> np.ndarray:
        smat = sq @ np.linalg.solve(-1j * w * np.eye(6) - gen.drift, sq) - np.eye(6)
        return smat[row]

    def dag_coeff(row: int, w: float) -> np.ndarray:
        return np.conj(coeff(row, -w))[_SWAP]

    def quad_coeff(row: int, w: float) -> np.ndarray:
        return coeff(row, w) + dag_coeff(row, w)

    x1, x1m = quad_coeff(0, omega), quad_coeff(0, -omega)
    x2, x2m = quad_coeff(2, omega), quad_coeff(2, -omega)
    var1 = float(np.real(x1 @ diff @ x1m))
    var2 = float(np.real(x2 @ diff @ x2m))
    cross = float(np.real(x1 @ diff @ x2m))
    n1o = float(np.real(dag_coeff(0, omega) @ diff @ coeff(0, -omega)))
    n2o = float(np.real(dag_coeff(2, omega) @ diff @ coeff(2, -omega)))
    return var1, var2, cross, n1o, n2o


def sample_stable(
    rng: np.random.Generator,
    count: int,
    *,
    equal_kappa: bool = False,
    gamma_m: float | None = None,
    n_th: float = 0.0,
    decades: float = 2.0,
) -> list[SystemParams]:
    """Stable parameter sets with rates log-uniform around kappa1 = 1."""
    out: list[SystemParams] = []
    while len(out) < count:
        k2, g1, g2, gm = 10.0 ** rng.uniform(-decades, decades, size=4)
        params = SystemParams(
            kappa1=1.0,
            kappa2=1.0 if equal_kappa else float(k2),
            g1=float(g1),
            g2=float(g2),
            gamma_m=float(gm) if gamma_m is None else gamma_m,
            n_th=n_th,
        )
        report = assess_stability(params)
        if report.analytic_pass and report.spectral_pass:
            out.append(params)
    return out


def min_symplectic_eigenvalue(n1: float, n2: float, c: float) -> float:
    """Smaller symplectic eigenvalue of the (n1, n2, c) covariance family."""
    t1, t2 = n1 + 0.5, n2 + 0.5
    big = t1 * t1 + t2 * t2 - 2.0 * c * c
    det = (t1 * t2 - c * c) ** 2
    return float(np.sqrt(0.5 * (big - np.sqrt(max(big * big - 4.0 * det, 0.0)))))


def sample_physical_family(
    rng: np.random.Generator, count: int
) -> list[tuple[float, float, float]]:
    """Random (n1, n2, c) triples whose covariance matrix is physical."""
    out: list[tuple[float, float, float]] = []
    while len(out) < count:
        n1, n2 = 10.0 ** rng.uniform(-2.0, 1.5, size=2)
        c_bound = np.sqrt((n1 + 0.5) * (n2 + 0.5))
        c = rng.uniform(-c_bound, c_bound)
        if min_symplectic_eigenvalue(n1, n2, c) >= 0.5 * (1.0 + 1e-9):
            out.append((float(n1), float(n2), float(c)))
    return out
