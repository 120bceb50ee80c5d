"""Concurrence vectors for bipartite entanglement of qudit pairs.

Components are overlaps ``<psi| (E_a - E_-a) (x) (E_b - E_-b) |psi*>`` over
pairs of positive roots of the A_{N-1} Lie algebra; the norm vanishes exactly
on product states.  Mixed states use Wootters' construction per root pair.
"""

from .concurrence import (
    ConcurrenceVector,
    concurrence_norm,
    concurrence_vector_mixed,
    concurrence_vector_pure,
    mixed_component,
    norm_sq,
    tau_matrix,
)
from .entropy import (
    EntropyReport,
    check_secular,
    entropy_bounds,
    entropy_from_norm_qubit,
    entropy_from_norm_qutrit,
    entropy_report,
)
from .errors import (
    ConcurrenceError,
    DensityMatrixError,
    DomainError,
    InvalidDimensionError,
    NormalizationError,
    NumericalError,
    StateFormatError,
)
from .fileio import load_state, save
from .ladder import LadderSet, build_ladder_set, flip_operators, verify_commutators
from .roots import Root, Weight, fundamental_weights, positive_roots, simple_roots
from .states import (
    CatalogEntry,
    DensityMatrix,
    PureState,
    catalog,
    catalog_basis,
    catalog_state,
    make_density,
    reduced_density,
    werner,
)
from .subspace import (
    SubspaceBasis,
    Verdict,
    delta_condition,
    edge_scan,
    enclosed_volume,
    sign_criterion,
    surface,
)

__version__ = "0.1.0"
