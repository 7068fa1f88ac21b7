"""Permutation-group toolkit for prime-power covering subgroups."""

from .actions import CosetActionMap, coset_action, core, find_block_system, is_primitive
from .classes import AClassTable, a_classes, conjugacy_classes, m_invariant, prime_power_class_reps
from .config import DEFAULT_CAPS, Caps
from .covering import (
    CoveringReport,
    GroupTriple,
    core_reduction,
    cross_validate,
    normal_restriction_check,
    prime_power_derangement,
    verify_covering,
    verify_covering_wreath,
)
from .errors import CapExceeded, InputError, PPCoverError, TheoremViolation, ValidationError
from .group import (
    PermGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    from_generators,
    intersection,
    is_normal,
    normal_closure,
    symmetric_group,
)
from .lattice import guralnick_saxl_scan, subgroup_lattice
from .perm import Permutation, element_order, format_cycles, parse_cycles, prime_power_order
from .structure import (
    ClassGraph,
    StructureReport,
    analyze,
    class_graph,
    g_orbit_decomposition,
    greedy_colouring,
    minimal_normal_subgroups,
    plinths,
    socle,
)

__version__ = "0.1.0"
