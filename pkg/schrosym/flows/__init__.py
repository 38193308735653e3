"""Closed-form flows, their checks, and the potentials they generate."""

from .builders import FlowName, build_flow, default_space
from .flowmap import FlowMap
from .potentials import (
    PotentialChain,
    generic_solution_pair,
    map_generic_solution,
    potential_chain,
    pushforward_solution,
    solution_residual,
    transform_potential,
)
from .verify import verify_group_law, verify_lie_equations

__all__ = [
    "FlowMap",
    "FlowName",
    "PotentialChain",
    "build_flow",
    "default_space",
    "generic_solution_pair",
    "map_generic_solution",
    "potential_chain",
    "pushforward_solution",
    "solution_residual",
    "transform_potential",
    "verify_group_law",
    "verify_lie_equations",
]
