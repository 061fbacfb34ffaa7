"""Roots of complex quadratics located as line/circle intersections."""

from ._lcroots import (
    Circle,
    Degeneracy,
    LcConstruction,
    LcError,
    LiteralError,
    MatchResult,
    MobiusReport,
    ParametricLine,
    RootReport,
    SimilarityReport,
    Tolerances,
    argument,
    build_construction,
    circle_through_origin,
    classify,
    compute_theta,
    format_complex,
    intersect_line_circle,
    match_roots,
    parse_complex,
    quadratic_formula,
    random_regular_instance,
    render_figure_svg,
    solve,
    solve_report_json,
    theta_via_bisection,
    unit_direction,
    verify_mobius_line_to_circle,
    verify_triangle_similarity,
)

__version__ = "0.1.0"
