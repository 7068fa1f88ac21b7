"""Deterministic Schreier-Sims on raw image tuples.

A chain is a list of levels.  Level ``i`` holds base point ``b_i``, the
strong generators fixing ``b_0..b_{i-1}``, the orbit of ``b_i`` under
them and an explicit transversal ``u_beta`` with ``u_beta(b_i) = beta``.
Every element factors uniquely as ``u_{k-1} * ... * u_1 * u_0`` (left
factor applied first), which is what sifting peels off.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .perm import _inv, _mul


class Level:
    __slots__ = ("point", "gens", "orbit", "trans", "_inv", "edge", "queue")

    def __init__(self, point: int, degree: int):
        ident = tuple(range(degree))
        self.point = point
        self.gens: list[tuple] = []
        self.orbit = [point]
        self.trans = {point: ident}
        self._inv = {point: ident}
        self.edge: dict[int, tuple[int, int]] = {}
        self.queue: deque = deque()

    def inverse(self, beta: int) -> tuple:
        u = self._inv.get(beta)
        if u is None:
            u = self._inv[beta] = _inv(self.trans[beta])
        return u

    def add_gen(self, g: tuple) -> None:
        gens = self.gens
        gi = len(gens)
        gens.append(g)
        orbit, trans, edge, queue = self.orbit, self.trans, self.edge, self.queue
        n_old = len(orbit)
        for k in range(n_old):
            pt = orbit[k]
            img = g[pt]
            if img not in trans:
                trans[img] = _mul(trans[pt], g)
                orbit.append(img)
                edge[img] = (pt, gi)
            queue.append((pt, gi))
        k = n_old
        while k < len(orbit):
            pt = orbit[k]
            for j, x in enumerate(gens):
                img = x[pt]
                if img not in trans:
                    trans[img] = _mul(trans[pt], x)
                    orbit.append(img)
                    edge[img] = (pt, j)
                queue.append((pt, j))
            k += 1


def _first_moved(g: Sequence[int], skip=()) -> int:
    for i, v in enumerate(g):
        if i != v and i not in skip:
            return i
    raise ValueError("identity has no moved point")


class StabChain:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, degree: int, levels: list[Level]):
        self.degree = degree
        self.levels = levels

    @classmethod
    def build(cls, degree: int, gens: Sequence[tuple], base_prefix: Sequence[int] = ()) -> "StabChain":
        ident = tuple(range(degree))
        uniq = []
        seen = set()
        for g in gens:
            if g != ident and g not in seen:
                seen.add(g)
                uniq.append(g)
        base = list(dict.fromkeys(base_prefix))
        for g in uniq:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        levels = [Level(b, degree) for b in base]
        for g in uniq:
            for lvl in levels:
                lvl.add_gen(g)
                if g[lvl.point] != lvl.point:
                    break
        chain = cls(degree, levels)
        chain._complete(len(levels) - 1)
        return chain

    def copy(self) -> "StabChain":
        levels = []
        for lvl in self.levels:
            new = Level.__new__(Level)
            new.point = lvl.point
            new.gens = list(lvl.gens)
            new.orbit = list(lvl.orbit)
            new.trans = dict(lvl.trans)
            new._inv = dict(lvl._inv)
            new.edge = dict(lvl.edge)
            new.queue = deque(lvl.queue)
            levels.append(new)
        return StabChain(self.degree, levels)

    def extend(self, g: tuple) -> bool:
        """Add ``g`` to the group in place; return False if it was already a member."""
        ident = tuple(range(self.degree))
        r, j = self.strip(g)
        levels = self.levels
        if j == len(levels):
            if r == ident:
                return False
            levels.append(Level(_first_moved(r), self.degree))
        for lv in range(j + 1):
            levels[lv].add_gen(r)
        self._complete(j)
        return True

    def _complete(self, start: int) -> None:
        levels = self.levels
        ident = tuple(range(self.degree))
        i = start
        while i >= 0:
            lvl = levels[i]
            moved_down = False
            queue = lvl.queue
            while queue:
                pt, gi = queue.popleft()
                x = lvl.gens[gi]
                img = x[pt]
                if lvl.edge.get(img) == (pt, gi):
                    continue
                h = _mul(_mul(lvl.trans[pt], x), lvl.inverse(img))
                if h == ident:
                    continue
                r, j = self.strip(h, i + 1)
                if j == len(levels):
                    if r == ident:
                        continue
                    levels.append(Level(_first_moved(r), self.degree))
                for lv in range(i + 1, j + 1):
                    levels[lv].add_gen(r)
                i = j
                moved_down = True
                break
            if not moved_down:
                i -= 1

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Sift ``g`` from level ``start``; return the residue and the level it stopped at."""
        levels = self.levels
        for i in range(start, len(levels)):
            lvl = levels[i]
            beta = g[lvl.point]
            if beta == lvl.point:
                continue
            if beta not in lvl.trans:
                return g, i
            g = _mul(g, lvl.inverse(beta))
        return g, len(levels)

    def contains(self, g: tuple) -> bool:
        r, j = self.strip(g)
        return j == len(self.levels) and all(i == v for i, v in enumerate(r))

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def strong_generators(self) -> list[tuple]:
        out = []
        seen = set()
        for lvl in self.levels:
            for g in lvl.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def tail(self, k: int) -> "StabChain":
        """Chain of the pointwise stabilizer of the first ``k`` base points."""
        return StabChain(self.degree, self.levels[k:]).copy()

    def elements(self) -> Iterator[tuple]:
        """All elements, identity first, in a fixed order."""
        levels = [lvl for lvl in self.levels if len(lvl.orbit) > 1]
        ident = tuple(range(self.degree))
        if not levels:
            yield ident
            return
        depth = len(levels)

        def rec(i, right):
            lvl = levels[i]
            trans = lvl.trans
            if i == depth - 1:
                for beta in lvl.orbit:
                    yield _mul(trans[beta], right)
                return
            for beta in lvl.orbit:
                yield from rec(i + 1, _mul(trans[beta], right))

        yield from rec(0, ident)
