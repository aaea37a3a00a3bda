"""Symmetric edge polytopes: facets, Ehrhart counts, h* and gamma of complete bipartite graphs."""

from .closed_forms import (
    check_recursion,
    gamma_closed,
    hstar_closed,
    hstar_double_sum,
    hstar_via_colorings,
)
from .complex import SimplicialComplex, build_nevo_complex, check_balanced, f_polynomial
from .ehrhart import (
    count_lattice_points,
    count_lattice_points_bipartite,
    ehrhart_counts,
    hstar_via_interpolation,
)
from .errors import DomainError, InconsistentCountsError, InvariantViolation, ResourceLimitError, SepolyError
from .facets import (
    FacetFunction,
    count_facets_bipartite,
    count_facets_multipartite,
    enumerate_facets,
    facet_volume_bipartite,
    membership,
)
from .graph import Graph, complete_graph, make_complete_bipartite, make_complete_multipartite
from .groebner import (
    Binomial,
    bipartite_initial_terms,
    generate_gb,
    triangulation_from_nonfaces,
    verify_gb_divisibility,
)
from .poly import (
    ExactPolynomial,
    RationalPolynomial,
    gamma_extract,
    hstar_from_counts,
    interlaces,
    is_real_rooted,
    isolate_roots,
)
from .trees import (
    DirectedSpanningTree,
    enumerate_T,
    hstar_via_trees,
    ingoing_count,
    ingoing_count_closed,
    planar_spanning_tree_count,
)
from .verify import verify_all

__version__ = "0.1.0"
