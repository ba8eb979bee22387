"""Two-party communication protocols and gadget reductions for graph properties."""
from .comm import (
    ALICE, BOB, Message, PartyView, ProtocolOutcome, ProtocolViolation, Role, Transcript,
    run_protocol, split_edges, transcript_cost,
)
from .det import det_integer, det_mod_p
from .graph import (
    ArcPartition, DiGraph, EdgePartition, Graph, Matching, connected_components,
    hamming_weight, inner_product, is_bipartite, is_connected, is_eulerian,
)
from .matching import has_perfect_matching_exact, hopcroft_karp_max_matching, lovasz_pm_test

__version__ = "0.1.0"
