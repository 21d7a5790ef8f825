"""Colouring sphere triangulations: validation, dual gain graphs, and (d+1)/(d+2)-colourings."""

from .complex import (
    Cell,
    Complex2,
    OrientationAssignment,
    Triangulation,
    build,
    carry_orientation,
    cells,
    coherent_orientation,
    incidence_count,
    link_graph,
    skeleton,
    subdivide,
)
from .dual import (
    DualGraph,
    FCycle,
    GainAssignment,
    dual_graph,
    f_cycles,
    is_balanced,
    is_bipartite,
    propagate,
    walk_gain,
)
from .graphs import brute_force_colouring, exact_graph_colouring, verify_proper
from .vertex import (
    ChamberColouring,
    VertexColouring,
    canonical_local_from_colouring,
    colour_d_plus_1,
    colour_d_plus_2,
    colour_via_subdivision,
    div3_condition,
    find_subdivision,
    heawood_condition,
    psi_orientation,
    subdivision_from_colouring,
)

__version__ = "0.1.0"
