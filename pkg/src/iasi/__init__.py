"""Integer additive set-indexers (IASIs) of simple graphs.

Label vertices with finite sets of non-negative integers; every edge then
carries the sumset of its endpoints. This package provides the sumset and
progression arithmetic, verification and classification of such labelings,
constructions that always succeed, label-preserving graph transforms, a
JSON/DOT interchange layer, and an exhaustive small-graph checking harness
(also available as the ``iasi`` command).
"""

from .sets import (
    U64_MAX,
    APSet,
    CompatibilityTable,
    IntegerSet,
    compatibility_table,
    detect_ap,
    predicted_edge_cardinality,
    sumset,
)
from .graphs import (
    Graph,
    GraphViolation,
    IndexSummary,
    LabeledGraph,
    find_graph_violations,
    induce_edge_labels,
    summarize_indices,
    validate_graph,
)
from .classify import (
    ClassificationReport,
    Collision,
    EdgeClassification,
    GcdReport,
    InjectivityReport,
    MultiplierReport,
    MultiplierViolation,
    check_gcd_invariant,
    check_gcd_invariant_components,
    check_multiplier_condition,
    check_singleton_endpoint_rule,
    check_uniformity,
    classify_arithmetic,
    classify_edges,
    verify_iasi,
)
from .construct import (
    ConstructionParams,
    ConstructionResult,
    construct_arbitrary,
    construct_complete,
    distinct_sum_sequence,
    restrict_labeling,
)
from .transforms import (
    contract_edge,
    reduce_topologically,
    subdivide,
    to_line_graph,
    to_total_graph,
)
from .io import (
    document_dict,
    document_text,
    dot_text,
    export_dot,
    load_document,
    load_graph,
    save_document,
)
from .catalog import (
    CheckRecord,
    check_one_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    path_graph,
    probe_k3_three_index,
    records_jsonl,
    run_catalog_checks,
    star_graph,
    write_records_jsonl,
)
from .errors import (
    DisconnectedGraphError,
    GraphValidationError,
    IasiError,
    InvalidLabelingError,
    LabelCollisionError,
    LabelOverflowError,
    NotArithmeticError,
    SchemaError,
    SubgraphError,
)

__version__ = "0.1.0"
