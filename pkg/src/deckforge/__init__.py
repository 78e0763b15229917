"""Graph decks: computation, reconstruction of special families, and exhaustive search."""

from .constructions import FamilySpec, same_deck_pair, verify_construction
from .deck import (
    Deck,
    compute_deck,
    count_induced,
    deck_common,
    deck_complement,
    decks_equal,
    derive_subdeck,
    validate_deck,
)
from .degrees import DegreeList, degree_list_from_deck, solve_degree_list, taylor_threshold
from .graph import (
    Graph,
    automorphism_count,
    block_decomposition,
    canonical_form,
    complement,
    connectivity_class,
    disjoint_union,
    induced_subgraph,
    is_isomorphic,
)
from .graph6 import parse_graph6, write_graph6
from .reconstruct import (
    recognize_hereditary_class,
    reconstruct_clique_union,
    reconstruct_complete_multipartite,
    reconstruct_components,
    reconstruct_regular_cutvertex,
)
from .search import (
    check_distinguishing,
    enumerate_graphs,
    max_reconstructibility,
    same_deck_classes,
    sw_card_multiset,
)

__version__ = "0.1.0"
