"""Sum and difference indices of graphs: exact solver, bounds,
closed-form constructions, and Cayley-graph tree embeddings."""

from .graphs import (
    FamilySpec,
    Graph,
    GraphFormatError,
    emit_edge_list,
    emit_graph6,
    generate,
    graph_stats,
    parse_edge_list,
    parse_family,
    parse_graph6,
)
from .labeling import (
    EdgeLabelSummary,
    Kind,
    VertexLabeling,
    diff_classes_are_linear_forests,
    index_of_labeling,
    induced_labels,
    is_proper_edge_coloring_induced,
)
from .bounds import BoundReport, bound_report, chromatic_index
from .solver import (
    Budget,
    FeasibleResult,
    IndexCertificate,
    feasible_k,
    solve_index,
)
from .brute import brute_force_index, search_count_at_most
from .constructions import CONSTRUCTIONS, Construction
from .cayley import (
    EmbeddingCertificate,
    HDElement,
    binary_tree_threshold,
    embed_tree,
    grid_sphere_count,
    hd_distance,
    hd_sphere_count,
    labeling_from_subgraph,
    tree_density_lower_bound,
)

__version__ = "0.1.0"
