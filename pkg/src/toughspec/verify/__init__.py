"""Desk-scale verification harnesses for the spectral toughness and
Hamiltonicity claims."""
from .claims import (
    HamiltonianClaim,
    OneToughClaim,
    RegularToughnessClaim,
    SpectralBoundsClaim,
    TToughClaim,
    as_chunks,
    compare_tuples,
    sample_hamiltonian,
    sample_t_tough,
    verify_forced_cycles,
    verify_hamiltonian,
    verify_join_comparison,
    verify_one_tough,
    verify_regular_toughness,
    verify_spectral_bounds,
    verify_t_tough,
)
from .report import TOL, Record, VerificationReport

__all__ = [
    "TOL", "Record", "VerificationReport",
    "OneToughClaim", "HamiltonianClaim", "TToughClaim", "SpectralBoundsClaim",
    "RegularToughnessClaim", "as_chunks", "compare_tuples",
    "verify_one_tough", "verify_hamiltonian", "verify_t_tough", "sample_hamiltonian",
    "sample_t_tough", "verify_join_comparison", "verify_spectral_bounds",
    "verify_regular_toughness", "verify_forced_cycles",
]
