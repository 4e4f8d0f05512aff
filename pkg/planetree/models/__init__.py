# Copyright Cade Stocker 2026
"""
Value types for the planetree toolkit.

This package organizes models by domain:
- geom: Points, point sets in general position, exact predicates, convex hull
- spantree: Spanning trees and their structural checks (length, planarity, diameter, caterpillars, duals)
- flatconvex: Flat convex sets in exact integer arithmetic, gap and cover sequences, realization
"""

from planetree.models.geom import (
    Point,
    PointSet,
    Segment,
    GeneralPositionReport,
    orientation,
    segments_cross,
    validate_general_position,
    convex_hull,
)

from planetree.models.spantree import (
    SpanningTree,
    TreeMetrics,
    canonical_edge,
    tree_length,
    is_plane,
    hop_diameter,
    is_caterpillar,
    tree_metrics,
    dual_graph,
    dual_is_path,
)

from planetree.models.flatconvex import (
    FlatConvexSet,
    GapSequence,
    CoverSequence,
    TOP,
    BOTTOM,
    chords_cross,
    gap_sequence,
    cover_sequence,
    flat_length,
    realize,
)
