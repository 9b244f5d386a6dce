"""Pole catalog with closed-form residues and its contour certification."""

from digit_dirichlet.poles.catalog import (
    ROW_FIELDS,
    PoleDescriptor,
    count_poles,
    descriptor_to_row,
    enumerate_poles,
    pole_count_ratios,
)
from digit_dirichlet.poles.certify import ResidueReport, certify_poles, contour_radius, residue_check

__all__ = [
    "ROW_FIELDS",
    "PoleDescriptor",
    "ResidueReport",
    "certify_poles",
    "contour_radius",
    "count_poles",
    "descriptor_to_row",
    "enumerate_poles",
    "pole_count_ratios",
    "residue_check",
]
