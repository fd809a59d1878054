"""satforge: constructions, certificates, and exhaustive search for
clique-saturated graphs with minimum-degree constraints."""

from .graph import (
    Graph,
    MAX_VERTICES,
    bits,
    common_neighborhood,
    complete_graph,
    count_cliques,
    cycle_graph,
    empty_graph,
    from_edges,
    from_graph6,
    has_clique,
    has_clique_in,
    induced_subgraph,
    is_clique_free,
    is_saturated,
    join,
    min_degree,
    path_graph,
    to_dot,
    to_graph6,
    triangles_per_edge,
)
from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_order
from .constructions import (
    APPENDIX_IDS,
    LabeledGraph,
    appendix_graph,
    ehm,
    f_core,
    f_graph,
    h_core,
    h_graph,
    r_core,
    r_graph,
    w_graph,
)
from .support import (
    AssemblyError,
    PaddingPlan,
    PreSupportReport,
    SupportReport,
    SupportStructure,
    assemble,
    check_pre_support,
    check_support,
    complete_to_support,
    padding_plan,
    x_clique_census,
)
from .analysis import (
    BoundDomainError,
    BoundSpec,
    Classification,
    Lb3Certificate,
    NeighborhoodPartition,
    cell_relation,
    check_rule5,
    check_rules_lemma,
    classify_low_degree,
    degree_four_vertices,
    evaluate_bound,
    list_bounds,
    partition_neighborhood,
    rule_targets,
    verify_lb3,
)
from .search import (
    SearchQuery,
    SearchReport,
    enumerate_graphs,
    enumerate_saturated,
    merge_reports,
    random_saturated_graph,
    sat_value,
    split_work,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
