"""Exact diagonalization toolkit for periodic spin-1/2 chains.

Spins map to hard-core bosons on occupancy bitmasks, Hamiltonians
block-diagonalize by magnetization sector, ground-state level crossings
along the coupling-field path come out in closed form, and the
site-averaged entanglement measure characterizes each phase.
"""

__version__ = "0.1.0"

from .basis import SectorBasis, SectorVector, enumerate_sector, mask_string
from .eigen import EigenDecomposition, eig_sym, ground_eigs, sym_eigenvalues
from .errors import (
    DegenerateInputError,
    DomainError,
    InconsistentStateError,
    InvalidSpecError,
    ModelParseError,
    NotSectorConservingError,
    NumericalError,
    ResourceLimitError,
    SpinChainError,
)
from .hamiltonian import (
    build_full_hamiltonian,
    build_lowering_map,
    build_sector_hamiltonian,
    coordinate_dump,
)
from .model import (
    Bond,
    ChainSpec,
    PathSpec,
    instantiate_path,
    make_xxx_chain,
    parse_model_document,
    parse_model_file,
    serialize_model,
)
from .observables import (
    GroundStateReport,
    OneSiteRDM,
    degeneracy_profile,
    eta,
    gram_schmidt_pair,
    ground_state_report,
    occupation_profile,
    one_site_rdm,
    total_spin,
)
from .spectrum import (
    CrossingPoint,
    PathSpectrum,
    SweepRow,
    crossing_points,
    ferro_check,
    ground_envelope,
    phase_boundaries,
    sector_minima,
    sweep,
)

__all__ = [
    "__version__",
    "Bond",
    "ChainSpec",
    "PathSpec",
    "make_xxx_chain",
    "instantiate_path",
    "parse_model_file",
    "parse_model_document",
    "serialize_model",
    "SectorBasis",
    "SectorVector",
    "enumerate_sector",
    "mask_string",
    "build_sector_hamiltonian",
    "build_full_hamiltonian",
    "build_lowering_map",
    "coordinate_dump",
    "EigenDecomposition",
    "eig_sym",
    "sym_eigenvalues",
    "ground_eigs",
    "PathSpectrum",
    "CrossingPoint",
    "SweepRow",
    "sector_minima",
    "crossing_points",
    "ground_envelope",
    "sweep",
    "ferro_check",
    "phase_boundaries",
    "OneSiteRDM",
    "GroundStateReport",
    "one_site_rdm",
    "occupation_profile",
    "eta",
    "total_spin",
    "gram_schmidt_pair",
    "ground_state_report",
    "degeneracy_profile",
    "SpinChainError",
    "InvalidSpecError",
    "ModelParseError",
    "DomainError",
    "NotSectorConservingError",
    "ResourceLimitError",
    "NumericalError",
    "InconsistentStateError",
    "DegenerateInputError",
]
