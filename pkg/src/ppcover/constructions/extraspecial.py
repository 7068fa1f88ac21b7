"""Small abstract groups realized regularly, automorphisms found by search,
and the extraspecial normaliser ``r^(1+2) : SL(2, r)`` inside the holomorph."""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

from ..config import Caps, resolve
from ..errors import CapExceeded, InputError, NotAnAutomorphism, ValidationError
from ..group import PermGroup, is_normal
from .family import FamilySpec


class GroupElementTable:
    """Elements of a group given by generators and a multiplication function.

    Elements are numbered breadth-first from the identity by right
    multiplication with the generators; ``words[i]`` is the generator
    sequence reaching element ``i``.
    """

    def __init__(self, identity: Hashable, generators: Sequence, multiply: Callable, limit: int = 10**5):
        self.multiply = multiply
        self.generators = list(generators)
        elements = [identity]
        index = {identity: 0}
        words: list[tuple[int, ...]] = [()]
        right = [[] for _ in self.generators]
        k = 0
        while k < len(elements):
            x = elements[k]
            for gi, g in enumerate(self.generators):
                y = multiply(x, g)
                j = index.get(y)
                if j is None:
                    if len(elements) >= limit:
                        raise CapExceeded("enumeration", limit, what="element table")
                    j = len(elements)
                    index[y] = j
                    elements.append(y)
                    words.append(words[k] + (gi,))
                right[gi].append(j)
            k += 1
        self.elements = elements
        self.index = index
        self.words = words
        self.right = [tuple(col) for col in right]
        self.generator_indices = [index[g] for g in self.generators]

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[self.multiply(self.elements[i], self.elements[j])]

    def power(self, i: int, e: int) -> int:
        out = 0
        for _ in range(e):
            out = self.mul(out, i)
        return out

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def evaluate(self, word: Sequence[int], images: Sequence[int]) -> int:
        out = 0
        for gi in word:
            out = self.mul(out, images[gi])
        return out

    def check(self) -> bool:
        """Closure and word evaluation reproduce every element."""
        return all(self.evaluate(w, self.generator_indices) == i for i, w in enumerate(self.words))


def regular_representation(table: GroupElementTable, caps: Caps | None = None) -> PermGroup:
    """Right-regular action ``x -> x g`` on the element list."""
    if not table.check():
        raise ValidationError("inconsistent element table")
    return PermGroup(len(table), table.right, caps=caps)


def automorphism_from_images(table: GroupElementTable, images: Sequence[int]) -> tuple[int, ...]:
    """Extend generator images to a map on all elements via the stored words.

    Accepted iff the map is a bijection and ``phi(x g) = phi(x) phi(g)`` on
    every Cayley-graph edge; returns the induced permutation of indices.
    """
    if len(images) != len(table.generators):
        raise InputError("one image per generator is required")
    n = len(table)
    if any(not 0 <= i < n for i in images):
        raise InputError("image is not an element of the group")
    phi = [table.evaluate(w, images) for w in table.words]
    if len(set(phi)) != n:
        raise NotAnAutomorphism("extension is not a bijection")
    for gi, col in enumerate(table.right):
        img = images[gi]
        for i, j in enumerate(col):
            if phi[j] != table.mul(phi[i], img):
                raise NotAnAutomorphism("extension is not multiplicative")
    return tuple(phi)


def is_automorphism(table: GroupElementTable, images: Sequence[int]) -> bool:
    try:
        automorphism_from_images(table, images)
    except NotAnAutomorphism:
        return False
    return True


def holomorph_overgroup(table: GroupElementTable, automorphisms: Sequence[tuple], caps: Caps | None = None) -> PermGroup:
    """``G : <automorphisms>`` acting on the element list, with G right-regular."""
    G = regular_representation(table, caps)
    A = PermGroup(len(table), list(table.right) + list(automorphisms), caps=caps)
    if not is_normal(A, G):
        raise ValidationError("regular subgroup is not normalized; an automorphism is invalid")
    return A


# -- the Heisenberg group r^(1+2) ------------------------------------------------

def heisenberg_table(r: int) -> GroupElementTable:
    """``(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`` mod r,
    generated by ``x = (1, 0, 0)`` and ``y = (0, 1, 0)``."""

    def mul(u, v):
        return ((u[0] + v[0]) % r, (u[1] + v[1]) % r, (u[2] + v[2] + u[0] * v[1]) % r)

    return GroupElementTable((0, 0, 0), [(1, 0, 0), (0, 1, 0)], mul)


def _monomial(table: GroupElementTable, a: int, b: int, c: int) -> int:
    """Index of ``x^a y^b z^c`` where ``z = (0, 0, 1)`` generates the centre."""
    x, y = table.generator_indices
    z = table.index[(0, 0, 1)]
    return table.mul(table.mul(table.power(x, a), table.power(y, b)), table.power(z, c))


def sl2_automorphisms(table: GroupElementTable, r: int) -> list[tuple]:
    """Lifts of ``[[1,1],[0,1]]`` and ``[[1,0],[1,1]]`` to automorphisms.

    Central corrections ``z^e`` on each generator image are searched in
    lexicographic order; the first choice whose automorphisms generate a
    group of order ``r(r^2 - 1)`` is returned.
    """
    target = r * (r * r - 1)
    for e1, e2, f1, f2 in itertools.product(range(r), repeat=4):
        upper = [_monomial(table, 1, 1, e1), _monomial(table, 0, 1, e2)]
        lower = [_monomial(table, 1, 0, f1), _monomial(table, 1, 1, f2)]
        try:
            autos = [automorphism_from_images(table, upper), automorphism_from_images(table, lower)]
        except NotAnAutomorphism:
            continue
        if PermGroup(len(table), autos).order() == target:
            return autos
    raise AssertionError("no lift of SL(2, r) of the expected order")


def extraspecial_example(r: int = 3, u_choice=0, caps: Caps | None = None) -> FamilySpec:
    """``A = r^(1+2) : SL(2, r)`` on r^3 points, ``G = r^(1+2)`` regular,
    ``U`` one of the subgroups strictly between ``Z(G)`` and ``G``."""
    from ..lattice import subgroup_lattice
    from ..perm import Permutation, format_cycles

    caps = resolve(caps)
    if r not in (3, 5, 7):
        raise InputError("r must be an odd prime in {3, 5, 7}")
    table = heisenberg_table(r)
    autos = sl2_automorphisms(table, r)
    A = holomorph_overgroup(table, autos, caps)
    G = regular_representation(table, caps)
    z = table.index[(0, 0, 1)]
    Z = PermGroup(len(table), [_right_mult(table, z)], caps=caps)
    choices = [
        U for U in subgroup_lattice(G, caps)
        if Z.is_subgroup_of(U) and Z.order() < U.order() < G.order()
    ]
    if isinstance(u_choice, PermGroup):
        matches = [i for i, U in enumerate(choices) if U.equals(u_choice)]
        if not matches:
            raise ValidationError("U is not strictly between Z(G) and G")
        u_choice = matches[0]
    if not 0 <= int(u_choice) < len(choices):
        raise ValidationError(f"U choice must be in 0..{len(choices) - 1}")
    U = choices[int(u_choice)]
    params = {"r": r, "m": 1, "U": int(u_choice)}
    extras = {
        "table": table,
        "center": Z,
        "automorphisms": autos,
        "choices": choices,
        "u_choices": [[format_cycles(Permutation(g, check=False)) for g in c.gen_tuples] for c in choices],
    }
    return FamilySpec("extraspecial", params, A, G, U, extras)


def _right_mult(table: GroupElementTable, i: int) -> tuple:
    return tuple(table.mul(j, i) for j in range(len(table)))


def exponent(table: GroupElementTable) -> int:
    from math import lcm

    return lcm(*(table.element_order(i) for i in range(len(table))))
