"""signednet: balance classification, spectra and dynamics of weighted
signed networks.

The package classifies connected signed graphs as balanced, antibalanced,
both, or strictly unbalanced; computes the spectral quantities separating the
classes (notably the distances d_b and d_a and the spectral-radius
contraction); simulates linear adjacency dynamics, signed random walks and
the extended linear threshold model; and generates the signed stochastic
block model, signed ring lattices and random signed trees used to exercise
all of it.  The ``signednet`` command line exposes the same functionality.
"""

from .core import (
    DegreeVector,
    Edge,
    SignedGraph,
    build_graph,
    components,
    degree_vector,
    doubled_adjacency,
    doubled_transition,
    random_walk_laplacian,
    sign_adjacency,
    signed_laplacian,
    symmetrized_transition,
    transition_matrix,
    unsigned_counterpart,
)
from .balance import (
    BalanceClassification,
    Bipartition,
    FrustrationReport,
    Verdict,
    antibalanced_partition_from_bipartite,
    bipartite_partition,
    classify,
    frustration,
    negate,
    sign_conflicting_walk,
    switch,
)
from .spectral import (
    BalanceMeasures,
    PerturbationEstimate,
    Spectrum,
    balance_measures,
    eigendecompose_symmetric,
    leading_eigenpair_pattern,
    perron_vectors_balanced,
    perturbation_estimate,
    verify_spectral_theorem,
)
from .dynamics import (
    ActivationSets,
    ELTConfig,
    StationaryKind,
    StationaryPrediction,
    Trajectory,
    certain_propagation_check,
    doubled_walk_simulate,
    elt_lattice_simulate,
    elt_simulate,
    linear_adjacency_simulate,
    predict_stationary,
    random_walk_simulate,
    rank1_approximation,
    simulate_walk_until_stationary,
    transition_power_sign_pattern,
)
from .generate import (
    AntibalancedPlan,
    BalancedPlan,
    FlipKPlan,
    LatticeParams,
    SSBMParams,
    random_signed_tree,
    ring_lattice,
    ssbm,
)
from .io import load_graph, parse_edge_list, write_edge_list

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
