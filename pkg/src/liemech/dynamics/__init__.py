"""Rigid-body dynamics: Euler, heavy top, Newton-Euler, Kirchhoff, hovercraft, satellite."""

from liemech.dynamics.body import (
    BodyParams,
    BodyState,
    Wrench,
    kinetic_energy,
    levi_civita,
    momenta,
    permutation_symbol,
)
from liemech.dynamics.equations import (
    cross,
    euler_rhs,
    heavy_top_energy,
    heavy_top_field,
    heavy_top_rhs,
    hovercraft_rhs,
    kirchhoff_lagrangian_rhs,
    kirchhoff_submarine_rhs,
    newton_euler_rhs,
    satellite_rhs,
)
from liemech.dynamics.integrate import (
    CSV_HEADER,
    SYSTEMS,
    ControlTable,
    Trajectory,
    conservation_drifts,
    fmt,
    integrate,
    integrate_ode,
    reconstruct_pose,
    rk4_step,
)

__all__ = [
    "BodyParams", "BodyState", "CSV_HEADER", "ControlTable", "SYSTEMS", "Trajectory", "Wrench",
    "conservation_drifts", "cross", "euler_rhs", "fmt", "heavy_top_energy", "heavy_top_field",
    "heavy_top_rhs", "hovercraft_rhs", "integrate", "integrate_ode", "kinetic_energy",
    "kirchhoff_lagrangian_rhs", "kirchhoff_submarine_rhs", "levi_civita", "momenta",
    "newton_euler_rhs", "permutation_symbol", "reconstruct_pose", "rk4_step", "satellite_rhs",
]
