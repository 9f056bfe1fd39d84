"""
Sector Hamiltonians, inclusion intertwiners and their exact identities
"""

from .hamiltonian import DEFAULT_MAX_DENSE_DIM, SectorOperator, apply_hamiltonian, assemble_hamiltonian
from .intertwiner import (
    Composition,
    InclusionOperator,
    IntertwiningResult,
    assemble_intertwiner,
    check_intertwining,
    compose_intertwiners,
)
from .pauli import check_pauli_form, pauli_hamiltonian

__all__ = [
    "DEFAULT_MAX_DENSE_DIM",
    "SectorOperator",
    "apply_hamiltonian",
    "assemble_hamiltonian",
    "Composition",
    "InclusionOperator",
    "IntertwiningResult",
    "assemble_intertwiner",
    "check_intertwining",
    "compose_intertwiners",
    "check_pauli_form",
    "pauli_hamiltonian",
]
