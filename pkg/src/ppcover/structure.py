"""Minimal normal subgroups, socle, plinths, orbit decomposition under a
normal subgroup, the socle-factor graph on the orbits, and greedy colouring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .actions import block_action, find_block_system
from .classes import conjugacy_classes
from .config import Caps
from .errors import TheoremViolation, ValidationError
from .group import PermGroup, generate_from_elements, is_normal, normal_closure


def _dedupe(groups: list[PermGroup]) -> list[PermGroup]:
    out: list[PermGroup] = []
    for N in groups:
        if not any(M.order() == N.order() and N.is_subgroup_of(M) for M in out):
            out.append(N)
    return out


def minimal_normal_subgroups(G: PermGroup, caps: Caps | None = None) -> list[PermGroup]:
    """Inclusion-minimal normal closures of single class representatives."""
    if G.is_trivial():
        return []
    table = conjugacy_classes(G, caps)
    closures = _dedupe([normal_closure(G, [c.rep]) for c in table.classes[1:]])
    minimal = [
        N for N in closures
        if not any(M.order() < N.order() and M.is_subgroup_of(N) for M in closures)
    ]
    return sorted(minimal, key=lambda N: N.order())


def socle(G: PermGroup, minimal: Sequence[PermGroup] | None = None, caps: Caps | None = None) -> PermGroup:
    if minimal is None:
        minimal = minimal_normal_subgroups(G, caps)
    return generate_from_elements(G.degree, (g for N in minimal for g in N.gen_tuples), G.caps)


def plinths(G: PermGroup, minimal: Sequence[PermGroup] | None = None, caps: Caps | None = None) -> list[PermGroup]:
    if not G.is_transitive():
        raise ValidationError("analysis requires transitive input")
    if minimal is None:
        minimal = minimal_normal_subgroups(G, caps)
    return [N for N in minimal if N.is_transitive()]


def is_innately_transitive(G: PermGroup, caps: Caps | None = None) -> bool:
    return bool(plinths(G, caps=caps))


@dataclass
class StructureReport:
    degree: int
    order: int
    minimal_normals: list[PermGroup]
    socle: PermGroup
    plinths: list[PermGroup]
    innately_transitive: bool
    primitive: bool
    plinth_regular: list[bool]
    block_system: list[list[int]] | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "order": self.order,
            "minimal_normal_orders": [N.order() for N in self.minimal_normals],
            "minimal_normal_abelian": [N.is_abelian() for N in self.minimal_normals],
            "socle_order": self.socle.order(),
            "plinths": len(self.plinths),
            "plinth_orders": [N.order() for N in self.plinths],
            "plinth_regular": self.plinth_regular,
            "plinth_abelian": [N.is_abelian() for N in self.plinths],
            "innately_transitive": self.innately_transitive,
            "primitive": self.primitive,
            "block_sizes": None if self.block_system is None else sorted({len(b) for b in self.block_system}),
        }
        out.update(self.extra)
        return out


def analyze(G: PermGroup, caps: Caps | None = None) -> StructureReport:
    """Structure of a transitive group; asserts the two-plinth theorem."""
    if G.degree < 2 or not G.is_transitive():
        raise ValidationError("analysis requires transitive input")
    mins = minimal_normal_subgroups(G, caps)
    soc = socle(G, mins)
    pl = [N for N in mins if N.is_transitive()]
    regular = [N.order() == G.degree for N in pl]
    blocks = find_block_system(G)
    primitive = blocks is None
    if len(pl) > 2:
        raise TheoremViolation(f"{len(pl)} plinths found; at most two are possible")
    if len(pl) == 2 and not (all(regular) and primitive):
        raise TheoremViolation("two plinths that are not both regular in a primitive group")
    return StructureReport(G.degree, G.order(), mins, soc, pl, bool(pl), primitive, regular, blocks)


def g_orbit_decomposition(A: PermGroup, G: PermGroup) -> list[list[int]]:
    """G-orbits of a transitive A with G normal; the first orbit contains 0."""
    if not is_normal(A, G):
        raise ValidationError("G is not normal in A")
    if not A.is_transitive():
        raise ValidationError("A must be transitive")
    orbits = G.orbits()
    if len(orbits) > 1 and not block_action(A, orbits).is_transitive():
        raise AssertionError("A does not permute the G-orbits transitively")
    return orbits


# -- socle-factor graph ---------------------------------------------------------

def greedy_colouring(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Smallest free colour, vertices in increasing order."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValidationError("graph has a loop")
        adj[u].add(v)
        adj[v].add(u)
    colour = [-1] * n
    for v in range(n):
        used = {colour[u] for u in adj[v] if colour[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return colour


def max_degree(n: int, edges: Sequence[tuple[int, int]]) -> int:
    deg = [0] * n
    for u, v in {(min(e), max(e)) for e in edges}:
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


@dataclass
class ClassGraph:
    vertices: list[PermGroup]
    edges: list[tuple[int, int, int]]  # (i, j, first orbit witnessing the edge)
    n_orbits: int
    max_degree: int
    colouring: list[int]

    def to_dict(self) -> dict:
        return {
            "vertices": len(self.vertices),
            "vertex_orders": [N.order() for N in self.vertices],
            "edges": [[i, j] for i, j, _ in self.edges],
            "edge_orbits": [k for _, _, k in self.edges],
            "n_orbits": self.n_orbits,
            "max_degree": self.max_degree,
            "colours": (max(self.colouring) + 1) if self.colouring else 0,
            "colouring": self.colouring,
        }

    def to_dot(self) -> str:
        lines = ["graph socle_factors {"]
        for i, N in enumerate(self.vertices):
            lines.append(f'  S{i} [label="S{i} |{N.order()}| c{self.colouring[i]}"];')
        for i, j, k in self.edges:
            lines.append(f'  S{i} -- S{j} [label="orbit {k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def class_graph(
    A: PermGroup,
    G: PermGroup,
    minimal_normals: Sequence[PermGroup] | None = None,
    caps: Caps | None = None,
) -> ClassGraph:
    """Graph on the minimal normal subgroups of G inside its socle; ``{S_i, S_j}``
    is an edge when on some G-orbit the socle induces the same group as
    ``S_i x S_j``.

    ``minimal_normals`` may be supplied when G is too large to enumerate.
    """
    orbits = g_orbit_decomposition(A, G)
    if minimal_normals is None:
        minimal_normals = minimal_normal_subgroups(G, caps)
    vertices = list(minimal_normals)
    if not vertices or any(N.is_abelian() for N in vertices):
        raise ValidationError("socle-factor graph needs a nonabelian socle")
    for N in vertices:
        if not N.is_subgroup_of(G) or not is_normal(G, N):
            raise ValidationError("supplied subgroup is not normal in G")
    S = socle(G, vertices)
    edges: list[tuple[int, int, int]] = []
    have = set()
    for k, orb in enumerate(orbits):
        S_img = S.restrict(orb)
        imgs = [N.restrict(orb) for N in vertices]
        active = [i for i, img in enumerate(imgs) if not img.is_trivial()]
        for a, i in enumerate(active):
            for j in active[a + 1:]:
                if (i, j) in have:
                    continue
                pair = PermGroup(len(orb), imgs[i].gen_tuples + imgs[j].gen_tuples, caps=G.caps)
                if pair.order() == S_img.order() and S_img.is_subgroup_of(pair):
                    have.add((i, j))
                    edges.append((i, j, k))
    n = len(vertices)
    pairs = [(i, j) for i, j, _ in edges]
    return ClassGraph(vertices, edges, len(orbits), max_degree(n, pairs), greedy_colouring(n, pairs))
