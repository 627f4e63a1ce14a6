"""Graceful labelings of compound graphs built from alpha-labeled bases."""
from .atlas import (
    AlphaBaseError,
    AlphaLabeledBase,
    alpha_base,
    atlas_base,
    base_complete_bipartite,
    base_cycle,
    base_grid,
    base_path,
)
from .constructions import (
    Compound,
    ConstructionSpec,
    Family,
    build,
    build_cycle_of,
    build_one_point_union_path,
    build_open_star,
    build_path_union,
    build_star_of,
)
from .graph import (
    CENTER,
    Graph,
    GraphError,
    LabeledGraph,
    Side,
    VertexAddress,
    addr,
    induced_edge_labels,
    new_graph,
)
from .labelers import (
    CalibrationError,
    LabelerReport,
    LabelingError,
    calibrated_cycle_variant,
    label,
    label_cycle_of,
    label_one_point_union,
    label_open_star,
    label_path_union,
    label_star_of,
)
from .oracle import SearchBudget, SearchOutcome, Status, cross_check_enumeration, find_alpha, find_graceful
from .verify import Certificate, Verdict, Violation, complement_labeling, verify_alpha, verify_graceful

__version__ = "0.1.0"
