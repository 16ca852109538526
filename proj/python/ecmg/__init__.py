"""Proper Hamiltonian paths in edge-coloured multigraphs."""

from ._ecmg import (
    EcmgError,
    Graph,
    extremal,
    find_php,
    hypothesis_holds,
    maximum_matching_size,
    solve,
    threshold,
    validate,
    verify_theorem,
)

__all__ = [
    "EcmgError",
    "Graph",
    "extremal",
    "find_php",
    "hypothesis_holds",
    "maximum_matching_size",
    "solve",
    "threshold",
    "validate",
    "verify_theorem",
]
