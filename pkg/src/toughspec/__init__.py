"""Spectral conditions for toughness and Hamiltonicity: graph families,
adjacency spectra, equitable quotients, exact toughness and Hamiltonian
search, plus verification harnesses."""
__version__ = "0.1.0"

from .errors import (
    CapacityError,
    DomainError,
    EmptyGraphError,
    Graph6Error,
    NumericalError,
    ParameterError,
    PartitionError,
    ToughspecError,
)
from .families import Family, FamilySpec, construct, parse_expression
from .graph import (
    Graph,
    complete,
    component_count,
    components,
    copies,
    cycle,
    degree_sequence,
    empty_graph,
    is_connected,
    join,
    path,
    petersen,
    star,
    union,
)
from .graph6 import parse_graph6, read_graph6, write_graph6
from .hamilton import (
    CyclePath,
    chvatal_condition,
    hamiltonian_cycle,
    hamiltonian_cycle_through,
    hamiltonian_path,
    is_hamiltonian_connected,
    theta_index,
)
from .isomorphism import find_isomorphism, is_isomorphic
from .partitions import Partition, QuotientMatrix, coarsest_equitable, quotient
from .spectral import (
    SpectralReport,
    char_poly_eval,
    eig_max_small,
    eigen_report,
    hong_bound,
    nikiforov_bound,
    nikiforov_profile,
    spectral_radius,
)
from .toughness import INFINITE, ToughnessCertificate, is_t_tough, toughness

__all__ = [
    "CapacityError",
    "DomainError",
    "EmptyGraphError",
    "Graph6Error",
    "NumericalError",
    "ParameterError",
    "PartitionError",
    "ToughspecError",
    "Graph",
    "complete",
    "component_count",
    "components",
    "copies",
    "cycle",
    "degree_sequence",
    "empty_graph",
    "is_connected",
    "join",
    "path",
    "petersen",
    "star",
    "union",
    "CyclePath",
    "chvatal_condition",
    "hamiltonian_cycle",
    "hamiltonian_cycle_through",
    "hamiltonian_path",
    "is_hamiltonian_connected",
    "theta_index",
    "SpectralReport",
    "char_poly_eval",
    "eig_max_small",
    "eigen_report",
    "hong_bound",
    "nikiforov_bound",
    "nikiforov_profile",
    "spectral_radius",
    "Family",
    "FamilySpec",
    "construct",
    "parse_expression",
    "parse_graph6",
    "read_graph6",
    "write_graph6",
    "find_isomorphism",
    "is_isomorphic",
    "Partition",
    "QuotientMatrix",
    "coarsest_equitable",
    "quotient",
    "INFINITE",
    "ToughnessCertificate",
    "is_t_tough",
    "toughness",
]
