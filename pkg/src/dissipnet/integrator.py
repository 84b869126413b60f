"""Fixed-step RK4 integration with rollout truncation on blowup.

Blowup (infinity-norm above a threshold, or any non-finite component) is
treated as data: rollouts truncate and record the index instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DimensionError, NonFiniteStateError

BLOWUP_THRESHOLD = 1e6


@dataclass
class Trajectory:
    """States sampled every ``h`` seconds, row k is x(k*h).

    ``blowup_index`` is the index of the first state that exceeded the
    blowup threshold or went non-finite; the stored states end there.
    """

    states: np.ndarray  # (T+1, n)
    h: float
    system_tag: str = ""
    blowup_index: Optional[int] = None

    def __post_init__(self):
        self.states = np.asarray(self.states, dtype=float)
        if self.states.ndim != 2:
            raise DimensionError("trajectory states must be a (steps+1, n) array")
        if not self.h > 0:
            raise ValueError("sampling period h must be positive")

    def __len__(self) -> int:
        return self.states.shape[0]

    @property
    def dim(self) -> int:
        return self.states.shape[1]


def rk4_step(f: Callable[[np.ndarray], np.ndarray], x, h: float) -> np.ndarray:
    """One classical Runge-Kutta step x + (h/6)(k1 + 2 k2 + 2 k3 + k4)."""
    if not h > 0:
        raise ValueError("step size h must be positive")
    x = np.asarray(x, dtype=float)
    stages = []
    k = f(x)
    for stage, (prev, frac) in enumerate(
        [(None, None), (0, 0.5), (1, 0.5), (2, 1.0)]
    ):
        if stage > 0:
            k = f(x + (frac * h) * stages[prev])
        if not np.all(np.isfinite(k)):
            raise NonFiniteStateError(
                f"RK4 stage {stage + 1} produced a non-finite value", stage=stage + 1
            )
        stages.append(np.asarray(k, dtype=float))
    k1, k2, k3, k4 = stages
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _rk4_update(f, x, h):
    # unchecked inner step; rollout inspects states instead of stages
    k1 = f(x)
    k2 = f(x + (0.5 * h) * k1)
    k3 = f(x + (0.5 * h) * k2)
    k4 = f(x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _state_bad(x: np.ndarray, threshold: float) -> bool:
    return not np.all(np.isfinite(x)) or np.max(np.abs(x)) > threshold


def rollout(
    f: Callable[[np.ndarray], np.ndarray],
    x0,
    h: float,
    steps: int,
    blowup_threshold: float = BLOWUP_THRESHOLD,
    system_tag: str = "",
) -> Trajectory:
    """Integrate ``steps`` RK4 steps from ``x0``, truncating on blowup.

    The returned trajectory has ``steps + 1`` states, or fewer if some state
    exceeded ``blowup_threshold`` in infinity norm or went non-finite; the
    offending state is kept as the last entry and its index recorded.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if not blowup_threshold > 0:
        raise ValueError("blowup threshold must be positive")
    x = np.asarray(x0, dtype=float)
    if x.ndim != 1:
        raise DimensionError("x0 must be a single state vector")
    states = np.empty((steps + 1, x.shape[0]))
    states[0] = x
    if _state_bad(x, blowup_threshold):
        return Trajectory(states[:1].copy(), h, system_tag, blowup_index=0)
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, steps + 1):
            x = _rk4_update(f, x, h)
            states[k] = x
            if _state_bad(x, blowup_threshold):
                return Trajectory(states[: k + 1].copy(), h, system_tag, blowup_index=k)
    return Trajectory(states, h, system_tag)


def rollout_batch(
    f: Callable[[np.ndarray], np.ndarray],
    x0s,
    h: float,
    steps: int,
    blowup_threshold: float = BLOWUP_THRESHOLD,
    system_tag: str = "",
) -> list[Trajectory]:
    """Roll out many initial conditions at once through a batched field.

    ``f`` must map ``(B, n) -> (B, n)``. Lanes that blow up are frozen at
    zero so the rest of the batch keeps integrating cleanly; the returned
    trajectories are truncated exactly as in :func:`rollout`. Results are
    ordered like ``x0s`` regardless of where blowups occur.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    x0s = np.asarray(x0s, dtype=float)
    if x0s.ndim != 2:
        raise DimensionError("x0s must be a (batch, n) array")
    n_traj = x0s.shape[0]
    states = np.zeros((n_traj, steps + 1, x0s.shape[1]))
    states[:, 0, :] = x0s
    blowup = np.full(n_traj, -1, dtype=int)

    x = x0s.copy()
    finite = np.isfinite(x).all(axis=1)
    bad0 = ~finite | (np.where(finite, np.abs(np.where(np.isfinite(x), x, 0.0)).max(axis=1), np.inf) > blowup_threshold)
    blowup[bad0] = 0
    alive = ~bad0
    x[~alive] = 0.0

    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, steps + 1):
            x_new = _rk4_update(f, x, h)
            finite = np.isfinite(x_new).all(axis=1)
            mag = np.abs(np.where(np.isfinite(x_new), x_new, 0.0)).max(axis=1)
            bad = alive & (~finite | (mag > blowup_threshold))
            states[:, k, :] = np.where(alive[:, None], x_new, 0.0)
            blowup[bad] = k
            alive = alive & ~bad
            x = np.where(alive[:, None], x_new, 0.0)
            if not alive.any():
                break

    out = []
    for i in range(n_traj):
        if blowup[i] >= 0:
            traj = Trajectory(
                states[i, : blowup[i] + 1].copy(), h, system_tag, blowup_index=int(blowup[i])
            )
        else:
            traj = Trajectory(states[i].copy(), h, system_tag)
        out.append(traj)
    return out


def detect_blowup(traj: Trajectory, threshold: float = BLOWUP_THRESHOLD) -> Optional[int]:
    """First index whose state exceeds ``threshold`` in infinity norm or is
    non-finite; None when the whole trajectory is within bounds."""
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    finite = np.isfinite(traj.states).all(axis=1)
    mag = np.abs(np.where(np.isfinite(traj.states), traj.states, 0.0)).max(axis=1)
    bad = ~finite | (mag > threshold)
    idx = np.argmax(bad)
    if bad[idx]:
        return int(idx)
    return None
