"""Symplectic matrices, canonical Hamiltonian flows and canonical-map checks."""

from liemech.symplectic.core import (
    ParticleHamiltonian,
    PhasePoint,
    SymplecticForm,
    canonical_check,
    central_potential,
    hamiltonian_flow,
    hamiltonian_rhs,
    harmonic_potential,
    is_symplectic,
    monodromy,
    numerical_jacobian,
    particle_hamiltonian,
    sp_algebra_residual,
    symplectic_form,
)

__all__ = [
    "ParticleHamiltonian", "PhasePoint", "SymplecticForm", "canonical_check", "central_potential",
    "hamiltonian_flow", "hamiltonian_rhs", "harmonic_potential", "is_symplectic", "monodromy",
    "numerical_jacobian", "particle_hamiltonian", "sp_algebra_residual", "symplectic_form",
]
