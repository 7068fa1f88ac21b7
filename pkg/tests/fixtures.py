"""Shared triples used by more than one test module."""

from ppcover.constructions import extraspecial_example
from ppcover.constructions.corpus import _direct_product
from ppcover.constructions.named import BUILDERS
from ppcover.covering import GroupTriple
from ppcover.group import PermGroup, alternating_group, cyclic_group, symmetric_group
from ppcover.perm import parse_cycles


def nontrivial_core_fixtures():
    out = []
    for u in range(4):
        out.append((f"extraspecial-{u}", extraspecial_example(3, u).triple))
    S3xC2 = _direct_product(symmetric_group(3), cyclic_group(2))
    C2 = PermGroup(5, [parse_cycles("(4 5)", 5)])
    out.append(("sym3xc2", GroupTriple(S3xC2, S3xC2, C2)))
    A4 = alternating_group(4)
    A4_3 = _direct_product(_direct_product(A4, A4), A4)
    V = PermGroup(12, [g + tuple(range(4, 12)) for g in BUILDERS["v4"]().gen_tuples])
    out.append(("alt4^3", GroupTriple(A4_3, A4_3, V)))
    S4 = symmetric_group(4)
    D8 = PermGroup(4, [parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)])
    out.append(("sym4-d8", GroupTriple(S4, S4, D8)))
    out.append(("alt4-v4", GroupTriple(S4, alternating_group(4), BUILDERS["v4"]())))
    return out
