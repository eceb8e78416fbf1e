"""Exact bracket-ring / Grassmann-Cayley engine for deciding whether d+4
points of projective d-space lie on a (possibly degenerate) rational normal
curve."""

import json

from ._core import (
    expand_text,
    fano_systems,
    gc_condition_text,
    phi_text,
    psi_text,
    sample_moment_curve,
    straighten_text,
)
from ._core import check_membership_json as _check_membership_json
from ._core import verify_white_json as _verify_white_json


def check_membership(dimension, points, method="both"):
    """Runs the membership test; points are lists of exact rational strings.

    Returns the report as a dict with keys dimension, n, on_hyperplane,
    general_position, subsets, verdict.
    """
    pts = [[str(c) for c in p] for p in points]
    return json.loads(_check_membership_json(dimension, pts, method))


def verify_white(points, system):
    """Membership report for the dual configuration of the seven planes."""
    pts = [[str(c) for c in p] for p in points]
    return json.loads(_verify_white_json(pts, system))


__all__ = [
    "check_membership",
    "expand_text",
    "fano_systems",
    "gc_condition_text",
    "phi_text",
    "psi_text",
    "sample_moment_curve",
    "straighten_text",
    "verify_white",
]
