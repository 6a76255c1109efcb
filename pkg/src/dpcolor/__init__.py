"""DP-colouring toolkit: multigraphs, covers, exhaustive colourability
checks, the potential function, edge-count bounds, and charge discharging."""
from .bounds import audit_graph, avg_degree_coefficient, min_edges, table1
from .cover import Cover, blowup_cover, build_cover, cover_from_lists, enumerate_covers, hard_cover
from .discharging import UndefinedSpecialSet, check_cases, component_sum_vs_phi, discharge, special_sets
from .multigraph import (
    Multigraph,
    blocks,
    block_surgery,
    blowup,
    build,
    classify_gdp,
    complete,
    cycle,
    edge_blocks,
    make_family,
    skeleton,
)
from .potential import check_submodular, is_exceptional, params, phi, rho, rho_local, rho_set
from .solver import (
    chi_dp,
    find_transversal,
    is_dp_critical,
    is_dp_degree_colorable,
    is_dp_h_colorable,
    is_h_minimal,
    verify_lemma31,
)

__version__ = "0.1.0"
