"""Discrete Wigner functions for qubits, qubit pairs and ququarts."""

from ._dwigner import (
    DimensionError,
    DomainError,
    Error,
    ParseError,
    bell,
    delta_pair,
    gisin,
    munro,
    parse_matrix,
    peres_horodecki,
    purity,
    run_parity_algorithm,
    serialize_matrix,
    super_fidelity,
    validate,
    werner,
    wigner_kernel,
    wigner_pair,
    wigner_su2,
    wigner_su4,
    xstate_delta,
    xstate_marginals,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "ParseError",
    "bell",
    "delta_pair",
    "gisin",
    "munro",
    "parse_matrix",
    "peres_horodecki",
    "purity",
    "run_parity_algorithm",
    "serialize_matrix",
    "super_fidelity",
    "validate",
    "werner",
    "wigner_kernel",
    "wigner_pair",
    "wigner_su2",
    "wigner_su4",
    "xstate_delta",
    "xstate_marginals",
]
