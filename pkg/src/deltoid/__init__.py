"""Deltoid tangents, amenable triangles and the power maps ``p_n``."""

from .core import (
    Classification,
    Line,
    Needle,
    Verdict,
    classify,
    deltoid_eval,
    frame,
    needle,
    parametrize,
    tangent_intersection,
    tangent_line,
)
from .errors import DeltoidError
from .power_map import pn_closed_form, pn_recurrence, pn_via_roots
from .special_loci import fibonacci_A_values, zero_locus
from .triangle import AmenableTriangle, orthocenter, vertices_from_orthocenter

__all__ = [
    "AmenableTriangle",
    "Classification",
    "DeltoidError",
    "Line",
    "Needle",
    "Verdict",
    "classify",
    "deltoid_eval",
    "fibonacci_A_values",
    "frame",
    "needle",
    "orthocenter",
    "parametrize",
    "pn_closed_form",
    "pn_recurrence",
    "pn_via_roots",
    "tangent_intersection",
    "tangent_line",
    "vertices_from_orthocenter",
    "zero_locus",
]
