"""Builders for the example families and supporting groups."""

from .affine import affine_example, agl32_sylow_example, gl32_example, sharply_two_transitive, singer_matrix
from .extraspecial import (
    GroupElementTable,
    automorphism_from_images,
    extraspecial_example,
    heisenberg_table,
    holomorph_overgroup,
    regular_representation,
)
from .family import FamilySpec
from .wreath import wreath_example, wreath_product

__all__ = [
    "FamilySpec",
    "GroupElementTable",
    "affine_example",
    "agl32_sylow_example",
    "automorphism_from_images",
    "extraspecial_example",
    "gl32_example",
    "heisenberg_table",
    "holomorph_overgroup",
    "regular_representation",
    "sharply_two_transitive",
    "singer_matrix",
    "wreath_example",
    "wreath_product",
]
