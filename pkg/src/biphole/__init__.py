"""Bipartite-hole number, connectivity and cycle invariants of small graphs."""

import numba as _numba

# the TBB layer shipped in some environments is too old and only warns
if _numba.config.THREADING_LAYER == "default":
    _numba.config.THREADING_LAYER = "workqueue"

from .graph import (  # noqa: E402
    INFINITY,
    Graph,
    GraphFormatError,
    bondy_chvatal_closure,
    build_graph,
    components,
    degree_sequence,
    delta,
    has_triangle,
    is_balanced_complete_bipartite,
    neighborhood_of_set,
    parse_edge_list,
    parse_graph6,
    sigma2,
    write_edge_list,
    write_graph6,
)
from .holes import (  # noqa: E402
    HoleSpectrum,
    HoleWitness,
    check_tialpha_equals_n,
    find_bipartite_hole,
    hole_spectrum,
    min_components_bound_check,
    tialpha_definitional,
    tialpha_formula,
)
from .connectivity import CutCertificate, alpha, is_2_connected, kappa_formula, kappa_oracle  # noqa: E402
from .cycles import (  # noqa: E402
    CycleSpectrum,
    CycleWitness,
    cycle_spectrum,
    hamiltonian_cycle,
    hamiltonian_path,
    s_cyclable,
    x_set,
)
from .report import InvariantReport, invariant_report  # noqa: E402

__version__ = "0.1.0"
