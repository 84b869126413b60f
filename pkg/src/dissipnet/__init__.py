"""Neural dynamics emulators for dissipative chaos with a boundedness guarantee.

The package jointly trains an MLP vector field, a quadratic energy function,
and a level-set radius; a closed-form projection layer keeps the learned
field dissipative, so long rollouts provably stay bounded.
"""

from . import autodiff, evaluation, integrator, lyapunov, projection, systems, training
from .integrator import Trajectory, detect_blowup, rk4_step, rollout, rollout_batch
from .lyapunov import QuadraticLyapunov
from .projection import ProjectionOutput, certify, project, projected_field
from .systems import SystemSpec, lorenz63_rhs, lorenz96_rhs, truncated_ks_rhs

__all__ = [
    "autodiff",
    "evaluation",
    "integrator",
    "lyapunov",
    "projection",
    "systems",
    "training",
    "Trajectory",
    "detect_blowup",
    "rk4_step",
    "rollout",
    "rollout_batch",
    "QuadraticLyapunov",
    "ProjectionOutput",
    "certify",
    "project",
    "projected_field",
    "SystemSpec",
    "lorenz63_rhs",
    "lorenz96_rhs",
    "truncated_ks_rhs",
]

__version__ = "0.1.0"
