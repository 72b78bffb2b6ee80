"""Edge-biclique hypergraphs, biclique line graphs, and their Helly/conformal recognition."""

__version__ = "0.1.0"

from .biclique import Biclique, EBHypergraph, eb_hypergraph, enumerate_bicliques
from .blg import (
    biclique_line_graph,
    edges_adjacent,
    embed_apex,
    embed_double,
    root_graph,
    verify_f_decomposition,
)
from .catalog import catalog
from .formats import parse_edge_list, parse_graph6, to_graph6
from .graph import (
    Graph,
    build_graph,
    complement,
    induced,
    is_complete_bipartite,
    is_isomorphic,
    line_graph,
    maximal_cliques,
    to_dot,
)
from .hypergraph import (
    Hypergraph,
    Verdict,
    clique_hypergraph,
    dual,
    hyper_line_graph,
    is_conformal,
    is_helly,
    make_hypergraph,
    reduction,
    two_section,
)
from .recognition import (
    find_b_template,
    find_induced,
    is_clique_helly,
    is_eb_conformal,
    is_eb_helly,
    is_eb_hereditary_helly,
    is_hereditary_blg,
)

__all__ = [
    "Biclique",
    "EBHypergraph",
    "Graph",
    "Hypergraph",
    "Verdict",
    "biclique_line_graph",
    "build_graph",
    "catalog",
    "clique_hypergraph",
    "complement",
    "dual",
    "eb_hypergraph",
    "edges_adjacent",
    "embed_apex",
    "embed_double",
    "enumerate_bicliques",
    "find_b_template",
    "find_induced",
    "hyper_line_graph",
    "induced",
    "is_clique_helly",
    "is_complete_bipartite",
    "is_conformal",
    "is_eb_conformal",
    "is_eb_helly",
    "is_eb_hereditary_helly",
    "is_helly",
    "is_hereditary_blg",
    "is_isomorphic",
    "line_graph",
    "make_hypergraph",
    "maximal_cliques",
    "parse_edge_list",
    "parse_graph6",
    "reduction",
    "root_graph",
    "to_dot",
    "to_graph6",
    "two_section",
    "verify_f_decomposition",
]
