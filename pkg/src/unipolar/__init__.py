"""Recognition and optimization for unipolar and generalised split graphs.

A unipolar graph partitions into a central clique plus vertex-disjoint
side cliques with no edges between different sides; a generalised split
graph is one where the graph or its complement is unipolar. This package
recognises both classes in O(n^2) time with a certificate, and solves
maximum clique, minimum colouring, maximum stable set and minimum clique
cover for recognized graphs via bipartite matching.
"""

from .graphs import (
    Graph,
    GraphInputError,
    VertexSet,
    closed_neighborhood,
    complement,
    graph_from_edges,
    is_clique,
)
from .recognition import (
    COMPLETE,
    BlockAssignment,
    GsgCertificate,
    IndepResult,
    Representation,
    antiedge,
    blocks,
    check_representation,
    indep,
    recognise,
    recognise_counted,
    recognise_gsg,
    verify,
)
from .optimizers import (
    BipartiteGraph,
    Coloring,
    Matching,
    max_matching,
    min_vertex_cover,
    solve_clique_cover,
    solve_coloring,
    solve_max_clique,
    solve_stable_set,
)
from .generators import GenParams, gen_gnp, gen_gsg, gen_unipolar, perturb

__all__ = [
    "Graph",
    "GraphInputError",
    "VertexSet",
    "graph_from_edges",
    "complement",
    "closed_neighborhood",
    "is_clique",
    "COMPLETE",
    "Representation",
    "BlockAssignment",
    "GsgCertificate",
    "IndepResult",
    "verify",
    "antiedge",
    "indep",
    "blocks",
    "recognise",
    "recognise_counted",
    "recognise_gsg",
    "check_representation",
    "BipartiteGraph",
    "Matching",
    "Coloring",
    "max_matching",
    "min_vertex_cover",
    "solve_stable_set",
    "solve_clique_cover",
    "solve_max_clique",
    "solve_coloring",
    "GenParams",
    "gen_unipolar",
    "gen_gsg",
    "gen_gnp",
    "perturb",
]

__version__ = "0.1.0"
