"""Permutation groups given by generators.

A :class:`PermGroup` is immutable; its stabilizer chain is built on first
use and cached.  The base is chosen deterministically (forced prefix, then
first moved points), so the same generator list always gives the same
base and the same element enumeration order.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .chain import StabChain
from .config import Caps, resolve
from .errors import CapExceeded, InputError, ValidationError
from .perm import Permutation, _conj, _mul


def _as_tuple(p, degree: int) -> tuple:
    if isinstance(p, Permutation):
        t = p.images
    else:
        t = Permutation(p).images
    if len(t) != degree:
        raise InputError(f"generator of degree {len(t)} in a group of degree {degree}")
    return t


class PermGroup:
    """A subgroup of Sym(degree) generated by ``generators``."""

    def __init__(
        self,
        degree: int,
        generators: Iterable = (),
        *,
        base: Sequence[int] = (),
        caps: Caps | None = None,
        _chain: StabChain | None = None,
    ):
        caps = resolve(caps)
        if degree <= 0:
            raise InputError("degree must be positive")
        if degree > caps.degree:
            raise CapExceeded("degree", caps.degree, degree)
        self.degree = degree
        self.caps = caps
        self._gens = tuple(_as_tuple(g, degree) for g in generators)
        self._base_prefix = tuple(base)
        self._chain = _chain

    # -- construction ------------------------------------------------------

    @classmethod
    def trivial(cls, degree: int, caps: Caps | None = None) -> "PermGroup":
        return cls(degree, (), caps=caps)

    @classmethod
    def _from_chain(cls, chain: StabChain, caps: Caps | None = None) -> "PermGroup":
        gens = chain.strong_generators()
        return cls(chain.degree, gens, caps=caps, _chain=chain)

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain.build(self.degree, self._gens, self._base_prefix)
        return self._chain

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation(g, check=False) for g in self._gens]

    @property
    def gen_tuples(self) -> tuple[tuple, ...]:
        return self._gens

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self._gens)})"

    # -- basic queries -----------------------------------------------------

    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order()

    @property
    def base(self) -> list[int]:
        return self.chain.base

    def contains(self, p) -> bool:
        t = p.images if isinstance(p, Permutation) else tuple(p)
        if len(t) != self.degree:
            raise InputError(f"degree mismatch: {len(t)} vs {self.degree}")
        return self.chain.contains(t)

    __contains__ = contains

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self._gens
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if _mul(a, b) != _mul(b, a):
                    return False
        return True

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(other.chain.contains(g) for g in self._gens)

    def equals(self, other: "PermGroup") -> bool:
        """Same subgroup of Sym(degree): order plus one-sided generator containment."""
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def element_tuples(self) -> Iterator[tuple]:
        n = self.order()
        if n > self.caps.enumeration:
            raise CapExceeded("enumeration", self.caps.enumeration, n, "element enumeration")
        return self.chain.elements()

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, identity first, in a reproducible order."""
        for t in self.element_tuples():
            yield Permutation(t, check=False)

    # -- orbits ----------------------------------------------------------------

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        out = [point]
        k = 0
        while k < len(out):
            x = out[k]
            for g in self._gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
            k += 1
        return out

    def orbits(self) -> list[list[int]]:
        """Orbit partition; each orbit sorted, orbits ordered by least point."""
        seen = [False] * self.degree
        out = []
        for p in range(self.degree):
            if not seen[p]:
                orb = self.orbit(p)
                for q in orb:
                    seen[q] = True
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, point: int) -> "PermGroup":
        chain = StabChain.build(self.degree, self._gens, (point,))
        return PermGroup._from_chain(chain.tail(1), self.caps)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        chain = StabChain.build(self.degree, self._gens, tuple(points))
        return PermGroup._from_chain(chain.tail(len(dict.fromkeys(points))), self.caps)

    # -- derived groups ----------------------------------------------------------

    def conjugate(self, a: Permutation) -> "PermGroup":
        return PermGroup(self.degree, [_conj(g, a.images) for g in self._gens], caps=self.caps)

    def restrict(self, points: Sequence[int]) -> "PermGroup":
        """The group induced on an invariant set, relabelled ``points[i] -> i``."""
        return PermGroup(len(points), [restrict_perm(g, points) for g in self._gens], caps=self.caps)

    def subgroup(self, gens: Iterable) -> "PermGroup":
        gens = [_as_tuple(g, self.degree) for g in gens]
        for g in gens:
            if not self.chain.contains(g):
                raise ValidationError("generator is not an element of the group")
        return PermGroup(self.degree, gens, caps=self.caps)

    def with_base(self, prefix: Sequence[int]) -> "PermGroup":
        return PermGroup(self.degree, self._gens, base=prefix, caps=self.caps)


def restrict_perm(g: Sequence[int], points: Sequence[int]) -> tuple:
    pos = {p: i for i, p in enumerate(points)}
    try:
        return tuple(pos[g[p]] for p in points)
    except KeyError:
        raise ValidationError("point set is not invariant") from None


def from_generators(degree: int, gens: Iterable, caps: Caps | None = None) -> PermGroup:
    return PermGroup(degree, gens, caps=caps)


def generate_from_elements(degree: int, elems: Iterable[tuple], caps: Caps | None = None) -> PermGroup:
    """Subgroup generated by a stream of elements, keeping only those that enlarge it."""
    chain = StabChain.build(degree, ())
    gens = []
    for e in elems:
        if chain.extend(e):
            gens.append(e)
    return PermGroup(degree, gens, caps=caps, _chain=chain)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, ())
    gens = [tuple(list(range(1, n)) + [0])]
    if n > 2:
        t = list(range(n))
        t[0], t[1] = 1, 0
        gens.append(tuple(t))
    return PermGroup(n, gens)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(n, ())
    gens = []
    for i in range(n - 2):
        img = list(range(n))
        img[i], img[i + 1], img[i + 2] = i + 1, i + 2, i
        gens.append(tuple(img))
    return PermGroup(n, gens)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [tuple(list(range(1, n)) + [0])] if n > 1 else ())


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


def is_normal(A: PermGroup, H: PermGroup) -> bool:
    if not H.is_subgroup_of(A):
        raise ValidationError("subgroup is not contained in the ambient group")
    hc = H.chain
    return all(hc.contains(_conj(h, a)) for h in H.gen_tuples for a in A.gen_tuples)


def normal_closure(A: PermGroup, S) -> PermGroup:
    """Smallest normal subgroup of ``A`` containing the elements (or group) ``S``."""
    if isinstance(S, PermGroup):
        seeds = list(S.gen_tuples)
    else:
        seeds = [_as_tuple(s, A.degree) for s in S]
    for s in seeds:
        if not A.chain.contains(s):
            raise ValidationError("normal_closure: seed element not in the ambient group")
    chain = StabChain.build(A.degree, ())
    gens = []
    queue = deque()
    for s in seeds:
        if chain.extend(s):
            gens.append(s)
            queue.append(s)
    while queue:
        x = queue.popleft()
        for a in A.gen_tuples:
            y = _conj(x, a)
            if chain.extend(y):
                gens.append(y)
                queue.append(y)
    return PermGroup(A.degree, gens, caps=A.caps, _chain=chain)


def intersection(G: PermGroup, H: PermGroup, caps: Caps | None = None) -> PermGroup:
    """``G ∩ H``: element filter when the smaller group fits the enumeration cap,
    otherwise a budgeted backtrack over the chain of the smaller group."""
    caps = resolve(caps) if caps is not None else G.caps
    if G.degree != H.degree:
        raise InputError("intersection of groups of different degree")
    small, big = (G, H) if G.order() <= H.order() else (H, G)
    if small.order() <= caps.enumeration:
        bc = big.chain
        return generate_from_elements(G.degree, (e for e in small.chain.elements() if bc.contains(e)), caps)
    return _intersection_backtrack(small, big, caps)


def _intersection_backtrack(small: PermGroup, big: PermGroup, caps: Caps) -> PermGroup:
    sc = small.chain
    base = sc.base
    bc = StabChain.build(big.degree, big.gen_tuples, base)
    levels = [lvl for lvl in sc.levels]
    ident = tuple(range(small.degree))
    found = StabChain.build(small.degree, ())
    gens: list[tuple] = []
    steps = 0

    def prefix_ok(p, depth):
        # is there an element of ``big`` agreeing with p on base[:depth]?
        r = p
        for i in range(depth):
            lvl = bc.levels[i]
            beta = r[lvl.point]
            if beta not in lvl.trans:
                return False
            r = _mul(r, lvl.inverse(beta))
        return True

    # element = u_{k-1} * ... * u_0 ; images of b_0..b_i depend only on u_i..u_0
    def rec(i, right):
        nonlocal steps
        steps += 1
        if steps > caps.backtrack_steps:
            raise CapExceeded("backtrack_steps", caps.backtrack_steps, what="intersection")
        if i == len(levels):
            if right != ident and bc.contains(right) and found.extend(right):
                gens.append(right)
            return
        lvl = levels[i]
        for beta in lvl.orbit:
            p = _mul(lvl.trans[beta], right)
            if prefix_ok(p, i + 1):
                rec(i + 1, p)

    rec(0, ident)
    return PermGroup(small.degree, gens, caps=caps, _chain=found)


def same_group(G: PermGroup, H: PermGroup) -> bool:
    return G.equals(H)
