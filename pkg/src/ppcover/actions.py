"""Coset actions, cores and block systems."""

from __future__ import annotations

from typing import Sequence

from .chain import StabChain
from .config import Caps, resolve
from .errors import CapExceeded, ValidationError
from .group import PermGroup
from .perm import Permutation, _mul


class CosetActionMap:
    """The action of ``A`` by right multiplication on the right cosets of ``U``.

    Coset ``i`` is stored through its lexicographically least element
    ``reps[i]``; coset 0 is ``U`` itself.  Cosets are numbered in the
    breadth-first order in which the generators of ``A`` reach them.
    """

    def __init__(self, A: PermGroup, U: PermGroup, caps: Caps | None = None):
        caps = resolve(caps) if caps is not None else A.caps
        if U.degree != A.degree or not U.is_subgroup_of(A):
            raise ValidationError("coset action: U is not a subgroup of A")
        index = A.order() // U.order()
        if index > caps.degree:
            raise CapExceeded("degree", caps.degree, index, "coset action")
        self.source = A
        self.stabilizer = U
        self.caps = caps
        n = A.degree
        self._uchain = StabChain.build(n, U.gen_tuples, range(n))
        ident = tuple(range(n))
        reps = [ident]
        lookup = {ident: 0}
        gen_images = [[0] * index for _ in A.gen_tuples]
        k = 0
        while k < len(reps):
            r = reps[k]
            for gi, g in enumerate(A.gen_tuples):
                c = self._canon(_mul(r, g))
                j = lookup.get(c)
                if j is None:
                    j = len(reps)
                    lookup[c] = j
                    reps.append(c)
                gen_images[gi][k] = j
            k += 1
        if len(reps) != index:
            raise AssertionError(f"found {len(reps)} cosets, expected {index}")
        self.reps = reps
        self._lookup = lookup
        self.degree = index
        self.generator_images = [Permutation(img, check=False) for img in gen_images]
        self._image_group = None

    def _canon(self, a: tuple) -> tuple:
        c = a
        for lvl in self._uchain.levels:
            if len(lvl.orbit) == 1:
                continue
            best = min(lvl.orbit, key=c.__getitem__)
            if best != lvl.point:
                c = _mul(lvl.trans[best], c)
        return c

    def coset_of(self, a) -> int:
        """Index of the coset ``U a``."""
        t = a.images if isinstance(a, Permutation) else tuple(a)
        return self._lookup[self._canon(t)]

    def image(self, a) -> Permutation:
        t = a.images if isinstance(a, Permutation) else tuple(a)
        return Permutation([self._lookup[self._canon(_mul(r, t))] for r in self.reps], check=False)

    def image_group(self) -> PermGroup:
        if self._image_group is None:
            self._image_group = PermGroup(self.degree, self.generator_images, caps=self.caps)
        return self._image_group

    def image_of(self, H: PermGroup) -> PermGroup:
        """Image of a subgroup of the source group."""
        return PermGroup(self.degree, [self.image(g) for g in H.gen_tuples], caps=self.caps)

    def check_homomorphism(self) -> bool:
        """phi(ab) == phi(a) phi(b) on every ordered pair of generators."""
        gens = self.source.gen_tuples
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if self.image(_mul(a, b)) != self.generator_images[i] * self.generator_images[j]:
                    return False
        return True

    def kernel(self) -> PermGroup:
        """Kernel of the action, i.e. the core of ``U`` in ``A``."""
        n, m = self.source.degree, self.degree
        combined = [
            g + tuple(n + v for v in img.images)
            for g, img in zip(self.source.gen_tuples, self.generator_images)
        ]
        chain = StabChain.build(n + m, combined, range(n, n + m))
        tail = chain.tail(m)
        gens = [g[:n] for g in tail.strong_generators()]
        return PermGroup(n, gens, caps=self.caps)


def coset_action(A: PermGroup, U: PermGroup, caps: Caps | None = None) -> CosetActionMap:
    return CosetActionMap(A, U, caps)


def core(A: PermGroup, U: PermGroup, caps: Caps | None = None) -> PermGroup:
    """Largest subgroup of ``U`` normal in ``A``."""
    return CosetActionMap(A, U, caps).kernel()


kernel_of_coset_action = core


# -- blocks ------------------------------------------------------------------

def minimal_block_partition(G: PermGroup, a: int, b: int) -> list[list[int]]:
    """Finest G-invariant partition in which ``a`` and ``b`` share a block."""
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = [(a, b)]
    ra, rb = find(a), find(b)
    if ra != rb:
        parent[max(ra, rb)] = min(ra, rb)
    while pending:
        x, y = pending.pop()
        for g in G.gen_tuples:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[max(u, v)] = min(u, v)
                pending.append((g[x], g[y]))
    classes: dict[int, list[int]] = {}
    for p in range(n):
        classes.setdefault(find(p), []).append(p)
    return sorted(classes.values())


def find_block_system(G: PermGroup) -> list[list[int]] | None:
    """A nontrivial block system of a transitive group, or None if primitive.

    The returned system is the minimal one whose block through 0 contains
    some ``beta``; candidates ``beta`` run over the suborbits of ``G_0``.
    """
    if G.degree < 2:
        raise ValidationError("primitivity needs degree >= 2")
    if not G.is_transitive():
        raise ValidationError("primitivity test needs a transitive group")
    stab = G.point_stabilizer(0)
    for orb in stab.orbits():
        beta = orb[0]
        if beta == 0:
            continue
        blocks = minimal_block_partition(G, 0, beta)
        if len(blocks) > 1:
            return blocks
    return None


def is_primitive(G: PermGroup) -> bool:
    return find_block_system(G) is None


def block_action(G: PermGroup, blocks: Sequence[Sequence[int]]) -> PermGroup:
    """The permutation group induced on a block system."""
    where = {}
    for i, blk in enumerate(blocks):
        for p in blk:
            where[p] = i
    gens = []
    for g in G.gen_tuples:
        img = []
        for blk in blocks:
            targets = {where[g[p]] for p in blk}
            if len(targets) != 1:
                raise ValidationError("not a block system of the group")
            img.append(targets.pop())
        gens.append(tuple(img))
    return PermGroup(len(blocks), gens, caps=G.caps)
