"""Cubic B-spline fitting through ordered points in 2D, 3D and beyond."""

from ._splinefit import (
    InputError,
    NumericError,
    approximate,
    basis,
    dominant_count,
    eval_bezier,
    eval_bspline,
    eval_cardinal,
    fit,
    knot_vector,
    load_points,
    turn_angle,
)

__all__ = [
    "InputError",
    "NumericError",
    "approximate",
    "basis",
    "dominant_count",
    "eval_bezier",
    "eval_bspline",
    "eval_cardinal",
    "fit",
    "knot_vector",
    "load_points",
    "turn_angle",
]
