# Copyright Cade Stocker 2026
"""
Algorithms for long plane spanning trees.

- oracle: exhaustive enumeration, the ground truth on small inputs
- approx: stars and wedge trees, and the constants of the approximation guarantee
- bistar / tristar: exact trees whose edges all touch two or three fixed roots
- convexopt: exact optimum in convex position, caterpillars and zigzag drawings
- localsearch: single-swap improvement
- generators: bound constructions and random instances
"""

from planetree.algorithms.oracle import (
    OracleResult,
    enumerate_plane_spanning_trees,
    longest_plane_tree_bruteforce,
    longest_plane_tree_diameter_at_most,
    longest_crossing_tree,
    local_optima_scan,
    longest_bistar_bruteforce,
    longest_tristar_bruteforce,
)

from planetree.algorithms.localsearch import (
    Swap,
    SwapStep,
    SwapTrace,
    improving_swap_exists,
    alg_local,
)

from planetree.algorithms.approx import (
    ApproxConstants,
    star,
    wedge_tree,
    alg_simple,
    approx_constant_f,
    check_algebra_roots,
    polynomial_roots,
    flat_four_tree_check,
)

from planetree.algorithms.bistar import (
    ValidPair,
    longest_plane_bistar,
    longest_diameter3_tree,
    bistar_table,
)

from planetree.algorithms.tristar import (
    ValidTuple,
    angular_preceq_c,
    longest_plane_tristar,
    best_tristar_over_hull_triples,
)

from planetree.algorithms.convexopt import (
    longest_plane_tree_convex,
    quadrilateral_exchange,
    zigzag_embedding,
    caterpillar_to_flat_arc,
    caterpillar_canonical_form,
    caterpillar_from_form,
    enumerate_caterpillars,
    is_unimodal_permutation,
)

from planetree.algorithms.generators import (
    BoundReport,
    arc_Pn,
    arc_crossing_tree,
    diameter_bound_arc,
    p4k2,
    random_general_position,
    random_convex_position,
    counterexample_9pt,
    bound_report,
)
