"""All subgroups of a small group, and the exhaustive no-covering-subgroup scan."""

from __future__ import annotations

from dataclasses import dataclass

from .config import Caps, resolve
from .errors import CapExceeded, ValidationError
from .group import PermGroup, is_normal
from .perm import Permutation, _mul, format_cycles


class ElementIndex:
    """Elements of a group by index, with a full multiplication table."""

    def __init__(self, G: PermGroup, caps: Caps | None = None):
        caps = resolve(caps) if caps is not None else G.caps
        if G.order() > caps.lattice:
            raise CapExceeded("lattice", caps.lattice, G.order(), "subgroup lattice")
        self.group = G
        self.elements = list(G.chain.elements())
        self.index = {e: i for i, e in enumerate(self.elements)}
        idx = self.index
        els = self.elements
        self.table = [[idx[_mul(a, b)] for b in els] for a in els]

    def closure(self, gens) -> frozenset[int]:
        seen = {0}
        queue = [0]
        mt = self.table
        for x in queue:
            row = mt[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)


def subgroup_sets(G: PermGroup, caps: Caps | None = None) -> tuple[ElementIndex, list[tuple[frozenset[int], tuple[int, ...]]]]:
    """Every subgroup as (element-index set, generating indices).

    Start from the cyclic subgroups and repeatedly join each new subgroup
    with each cyclic subgroup not contained in it, until nothing new appears.
    """
    ei = ElementIndex(G, caps)
    found: dict[frozenset[int], tuple[int, ...]] = {}
    cyclic: list[tuple[int, frozenset[int]]] = []
    for i in range(len(ei.elements)):
        c = ei.closure([i] if i else [])
        if c not in found:
            found[c] = (i,) if i else ()
            cyclic.append((i, c))
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            gens = found[s]
            for g, c in cyclic:
                if g in s:
                    continue
                j = ei.closure(gens + (g,))
                if j not in found:
                    found[j] = gens + (g,)
                    nxt.append(j)
        frontier = nxt
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return ei, [(s, found[s]) for s in ordered]


def subgroup_lattice(G: PermGroup, caps: Caps | None = None) -> list[PermGroup]:
    """All subgroups of ``G``, each once, ordered by order then element set."""
    ei, subs = subgroup_sets(G, caps)
    return [PermGroup(G.degree, [ei.elements[g] for g in gens], caps=G.caps) for _, gens in subs]


def closure_oracle_count(G: PermGroup, caps: Caps | None = None) -> int:
    """Number of distinct subgroups generated by at most two elements.

    Equals the subgroup count for groups all of whose subgroups are
    2-generated."""
    ei = ElementIndex(G, caps)
    n = len(ei.elements)
    seen = set()
    for i in range(n):
        for j in range(i, n):
            seen.add(ei.closure([i, j]))
    return len(seen)


@dataclass
class ScanResult:
    confirmed: bool
    subgroups: int
    proper_subgroups: int
    counterexample: PermGroup | None
    max_classes_met: int
    pp_classes_total: int

    def to_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = [format_cycles(Permutation(g, check=False)) for g in self.counterexample.gen_tuples]
        return {
            "confirmed": self.confirmed,
            "subgroups": self.subgroups,
            "proper_subgroups": self.proper_subgroups,
            "pp_classes_total": self.pp_classes_total,
            "max_classes_met": self.max_classes_met,
            "counterexample": ce,
        }


def guralnick_saxl_scan(A: PermGroup, T: PermGroup, caps: Caps | None = None) -> ScanResult:
    """Check that no proper subgroup of the simple normal subgroup ``T`` meets
    every A-class of prime-power elements of ``T``."""
    from .classes import a_classes
    from .covering import GroupTriple, verify_covering
    from .structure import minimal_normal_subgroups

    caps = resolve(caps)
    if not is_normal(A, T):
        raise ValidationError("T is not normal in A")
    if T.is_abelian():
        raise ValidationError("T must be nonabelian simple")
    mins = minimal_normal_subgroups(T, caps)
    if len(mins) != 1 or mins[0].order() != T.order():
        raise ValidationError("T is not simple")
    table = a_classes(A, T, caps)
    subs = subgroup_lattice(T, caps)
    best = 0
    counterexample = None
    for U in subs:
        if U.order() == T.order():
            continue
        rep = verify_covering(GroupTriple(A, T, U), table=table, caps=caps)
        best = max(best, rep.pp_classes_met)
        if rep.covered and counterexample is None:
            counterexample = U
    return ScanResult(
        confirmed=counterexample is None,
        subgroups=len(subs),
        proper_subgroups=len(subs) - 1,
        counterexample=counterexample,
        max_classes_met=best,
        pp_classes_total=len(table.pp_classes()),
    )
