"""Spectral-radius bounds for nonnegative matrices, signless Laplacians and
distance signless Laplacians of connected graphs, checked against
independently computed spectra."""

__version__ = "0.1.0"

from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    ParseError,
    degree_sequence,
    generate_family,
    is_connected,
    parse_edge_list,
    random_connected,
    serialize_edge_list,
)
from .metrics import (
    DistanceData,
    all_pairs_distances,
    is_regular,
    is_transmission_regular,
    second_distance_degrees,
)
from .spectra import (
    SpectrumResult,
    check_psd,
    jacobi_eigenvalues,
    majorization_check,
    power_spectral_radius,
)
from .bounds import (
    BoundReport,
    BoundValue,
    GraphAnalysis,
    closed_form_dsl,
    counterexample_star,
    distance_radius_bounds,
    dsl_bounds,
    q_bounds,
)
from .harness import FamilyCorpus, RandomCorpus, sweep, verify_graph, write_report
