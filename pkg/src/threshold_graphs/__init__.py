"""Exact construction, recognition and spectral analysis of threshold graphs."""

from .errors import *  # noqa: F401,F403
from .graph_core import (
    BinaryCreationSequence,
    Cell,
    CellKind,
    CompactCreationSequence,
    ThresholdGraph,
    WeightRealization,
    antiregular_graph,
    bcs_to_ccs,
    build_graph,
    ccs_to_bcs,
    complement,
    graph_from_json,
    graph_to_json,
    laplacian,
    validate_bcs,
    verify_weights,
    weight_realization,
)
from .ferrers import (
    FerrersDiagram,
    conjugate,
    durfee_size,
    fyd_to_adjacency,
    is_threshold_degrees,
    majorizes,
    render_fyd,
    sorted_degrees,
)
from .recognition import (
    ArbitraryGraph,
    RecognitionReport,
    block_form_check,
    equitable_partition_check,
    forbidden_subgraph_check,
    nested_neighborhood_check,
    peel_recognize,
)
from .spectral import (
    ExactPolynomial,
    Spectrum,
    StandardEigenbasis,
    antiregular_spectrum,
    char_poly,
    commute_check,
    grone_merris_check,
    integer_roots,
    jacobi_eigenvalues,
    predicted_eigenvalue,
    spectrum_from_cells,
    spectrum_from_charpoly,
    spectrum_from_conjugate,
    standard_eigenbasis,
    verify_eigenpair,
    verify_shared_eigenbasis,
)

__version__ = "0.1.0"
