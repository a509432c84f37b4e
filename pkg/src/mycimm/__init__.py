"""Clique immersions in generalized Mycielski graphs.

Build ``mu_m(G)``, check and transform K_t-immersion certificates, and
compute immersion numbers of small graphs exactly.
"""

from .certificate import (
    ImmersionCertificate,
    VerificationReport,
    Violation,
    realize_by_splitting,
    trivial_clique_certificate,
    verify_certificate,
)
from .dnp import (
    DnpBipartite,
    EdgeColoring,
    NeighborAssignment,
    check_dnp,
    ensure_dnp,
    max_matching,
    proper_edge_coloring_complete,
)
from .errors import ConsistencyError, Graph6ParseError, InputError, MycimmError, ParameterError, PreconditionError
from .graph import (
    FamilySpec,
    Graph,
    Multigraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_histogram,
    emit_graph6,
    generate_family,
    parse_graph6,
    path_graph,
)
from .lift import lift_certificate, lift_degenerate, lift_immersion
from .mycielski import MycGraph, MycVertex, cone_crosscheck, mycielskian
from .solver import (
    ConjectureReport,
    SearchBudget,
    SearchOutcome,
    SolveResult,
    degree_upper_bound,
    explore_conjecture,
    has_kt_immersion,
    immersion_number,
)

__version__ = "0.1.0"
