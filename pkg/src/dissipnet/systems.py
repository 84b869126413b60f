"""Ground-truth right-hand sides for the benchmark chaotic ODEs.

All RHS functions accept a single state of shape ``(n,)`` or a batch of
states of shape ``(..., n)`` and evaluate the field componentwise over the
leading axes. They are pure functions and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

import numpy as np

from .errors import DimensionError

LORENZ63_SIGMA = 10.0
LORENZ63_RHO = 28.0
LORENZ63_BETA = 8.0 / 3.0

LORENZ96_FORCING = 8.0
LORENZ96_DIM = 5

# The four-mode Galerkin truncation needs at least one linearly damped mode
# (k^2 - nu*k^4 < 0 for k = n_modes) or the quadratic terms, which conserve
# energy, cannot balance the linear growth and every trajectory escapes.
KS_NU = 0.085
KS_MODES = 4


@dataclass(frozen=True)
class SystemSpec:
    """One of the benchmark systems plus its parameter values.

    ``kind`` is one of ``"lorenz63"``, ``"lorenz96"``, ``"truncated_ks"``;
    ``dim`` is the state dimension (3, n, 2*n_modes respectively).
    """

    kind: str
    dim: int
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "lorenz63":
            if self.dim != 3:
                raise DimensionError("lorenz63 state dimension must be 3")
        elif self.kind == "lorenz96":
            if self.dim < 4:
                raise DimensionError(
                    "lorenz96 needs dim >= 4, cyclic indices collide below that"
                )
        elif self.kind == "truncated_ks":
            n_modes = int(self.params["n_modes"])
            if self.dim != 2 * n_modes:
                raise DimensionError("truncated_ks state dimension must be 2*n_modes")
            if not self.params["nu"] > 0:
                raise ValueError("truncated_ks requires nu > 0")
        else:
            raise ValueError(f"unknown system kind {self.kind!r}")


def lorenz63(sigma: float = LORENZ63_SIGMA, rho: float = LORENZ63_RHO,
             beta: float = LORENZ63_BETA) -> SystemSpec:
    return SystemSpec("lorenz63", 3, {"sigma": sigma, "rho": rho, "beta": beta})


def lorenz96(n: int = LORENZ96_DIM, forcing: float = LORENZ96_FORCING) -> SystemSpec:
    return SystemSpec("lorenz96", n, {"forcing": forcing})


def truncated_ks(n_modes: int = KS_MODES, nu: float = KS_NU) -> SystemSpec:
    return SystemSpec("truncated_ks", 2 * n_modes, {"n_modes": n_modes, "nu": nu})


def lorenz63_rhs(x, sigma: float = LORENZ63_SIGMA, rho: float = LORENZ63_RHO,
                 beta: float = LORENZ63_BETA) -> np.ndarray:
    """Convection-cell field (sigma*(x2-x1), x1*(rho-x3)-x2, x1*x2-beta*x3)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise DimensionError(f"lorenz63 expects 3 state components, got {x.shape[-1]}")
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    return np.stack(
        [sigma * (x2 - x1), x1 * (rho - x3) - x2, x1 * x2 - beta * x3], axis=-1
    )


def lorenz96_rhs(x, forcing: float = LORENZ96_FORCING) -> np.ndarray:
    """Cyclic advection field dx_i = (x_{i+1} - x_{i-2}) * x_{i-1} - x_i + F."""
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    if n < 4:
        raise DimensionError(f"lorenz96 needs at least 4 components, got {n}")
    x_p1 = np.roll(x, -1, axis=-1)
    x_m1 = np.roll(x, 1, axis=-1)
    x_m2 = np.roll(x, 2, axis=-1)
    return (x_p1 - x_m2) * x_m1 - x + forcing


@lru_cache(maxsize=None)
def _ks_quadratic_tensor(n_modes: int) -> np.ndarray:
    """Coefficient tensor C with quad(x)[k] = sum_ij C[k,i,j] x_i x_j.

    State layout is (alpha_1..alpha_N, beta_1..beta_N). Rows 0..N-1 hold the
    alpha' interactions, rows N..2N-1 the beta' ones:

      alpha_k' += -(k/2) sum_{m=1}^{k-1} a_m b_{k-m}
                  +(k/2) sum_{m=1}^{N-k} (a_{m+k} b_m - a_m b_{m+k})
      beta_k'  += (k/4) sum_{m=1}^{k-1} (a_m a_{k-m} - b_m b_{k-m})
                  +(k/2) sum_{m=1}^{N-k} (a_{m+k} a_m + b_{m+k} b_m)
    """
    n = n_modes
    c = np.zeros((2 * n, 2 * n, 2 * n))

    def a(i):  # alpha_i index, i is 1-based mode number
        return i - 1

    def b(i):
        return n + i - 1

    for k in range(1, n + 1):
        for m in range(1, k):
            c[a(k), a(m), b(k - m)] += -k / 2.0
            c[b(k), a(m), a(k - m)] += k / 4.0
            c[b(k), b(m), b(k - m)] += -k / 4.0
        for m in range(1, n - k + 1):
            c[a(k), a(m + k), b(m)] += k / 2.0
            c[a(k), a(m), b(m + k)] += -k / 2.0
            c[b(k), a(m + k), a(m)] += k / 2.0
            c[b(k), b(m + k), b(m)] += k / 2.0
    return c


def ks_linear_growth_rates(n_modes: int, nu: float) -> np.ndarray:
    """Per-mode linear coefficients lambda_k = k^2 - nu*k^4 for k = 1..N."""
    k = np.arange(1, n_modes + 1, dtype=float)
    return k**2 - nu * k**4


def truncated_ks_rhs(state, nu: float = KS_NU) -> np.ndarray:
    """Field of the N-mode Galerkin truncation of the KS equation.

    ``state`` packs (alpha_1..alpha_N, beta_1..beta_N); the constant alpha_0
    mode is fixed to zero and not represented.
    """
    state = np.asarray(state, dtype=float)
    dim = state.shape[-1]
    if dim % 2 != 0 or dim == 0:
        raise DimensionError(f"truncated_ks state length must be even, got {dim}")
    if not nu > 0:
        raise ValueError("nu must be positive")
    n_modes = dim // 2
    lam = ks_linear_growth_rates(n_modes, nu)
    lam_full = np.concatenate([lam, lam])
    c = _ks_quadratic_tensor(n_modes)
    quad = np.einsum("...i,...j,kij->...k", state, state, c)
    return state * lam_full + quad


def make_rhs(spec: SystemSpec) -> Callable[[np.ndarray], np.ndarray]:
    """Bind a SystemSpec's parameters into a state-only callable."""
    p = spec.params
    if spec.kind == "lorenz63":
        return lambda x: lorenz63_rhs(x, p["sigma"], p["rho"], p["beta"])
    if spec.kind == "lorenz96":
        return lambda x: lorenz96_rhs(x, p["forcing"])
    if spec.kind == "truncated_ks":
        return lambda x: truncated_ks_rhs(x, p["nu"])
    raise ValueError(f"unknown system kind {spec.kind!r}")
