"""Genus bounds, rotation-system embeddings, and structure of sparse random graphs."""

from .graphs import (
    CycleBudgetError,
    Graph,
    GraphError,
    InducedSubgraph,
    complete_bipartite_graph,
    complete_graph,
    contract_sets,
    cycle_graph,
    enumerate_cycles,
    excess,
    format_edge_list,
    giant_component,
    grid_graph,
    hypercube_graph,
    induced_subgraph,
    load_edge_list,
    parse_edge_list,
    path_graph,
    save_edge_list,
    two_core,
)
from .random_models import (
    EdgeProcess,
    add_uniform_edges,
    gnm,
    gnp,
    kappa_trajectory,
    trial_rng,
)
from .embeddings import (
    FaceTrace,
    GenusResult,
    SearchBudgetError,
    exact_genus,
    genus_lower_bound_density,
    genus_lower_bound_short_cycles,
    genus_of_rotation,
    genus_upper_bound,
    perturbation_upper_bound,
    trace_faces,
    validate_rotation,
)
from .asymptotics import (
    MCEstimate,
    component_fraction,
    component_fraction_derivative,
    cycle_count_limit,
    genus_per_edge,
    mc_cycle_count_limit,
)
from .census import (
    CycleNeighborhood,
    SupercriticalReport,
    classify_cycle_neighborhood,
    count_census_cycles,
    find_small_excess_subgraph,
    neighborhood_bounds_hold,
    predicted_core_excess,
    predicted_core_vertices,
    predicted_genus,
    supercritical_report,
)
from .regimes import (
    DEFAULT_THRESHOLDS,
    REGIME_NAMES,
    ContiguityVerdict,
    RegimePrediction,
    RegimeThresholds,
    contiguity_verdict,
    predict_genus,
)
from .fragile import (
    DecompositionError,
    FragileReport,
    PieceDecomposition,
    build_quotient,
    count_good_edges,
    decompose_into_pieces,
    fragile_experiment,
    select_cores,
)

__version__ = "0.1.0"
