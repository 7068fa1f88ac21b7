"""Imprimitive wreath products ``T wr H`` and the diagonal-pair example.

Point ``(b, p)`` of block ``b`` is numbered ``b * deg(T) + p``.
"""

from __future__ import annotations

from ..config import Caps, resolve
from ..errors import CapExceeded, ValidationError
from ..group import PermGroup
from .family import FamilySpec


def embed(t: tuple, blocks, nt: int, k: int) -> tuple:
    """``t`` acting simultaneously in each of the given blocks."""
    img = list(range(nt * k))
    for b in blocks:
        off = b * nt
        for p, v in enumerate(t):
            img[off + p] = off + v
    return tuple(img)


def block_permutation(s: tuple, nt: int) -> tuple:
    k = len(s)
    return tuple(s[b] * nt + p for b in range(k) for p in range(nt))


def wreath_product(T: PermGroup, H: PermGroup, caps: Caps | None = None) -> PermGroup:
    caps = resolve(caps)
    nt, k = T.degree, H.degree
    if nt * k > caps.degree:
        raise CapExceeded("degree", caps.degree, nt * k, "wreath product")
    gens = [embed(t, [0], nt, k) for t in T.gen_tuples]
    gens += [block_permutation(s, nt) for s in H.gen_tuples]
    return PermGroup(nt * k, gens, caps=caps)


def base_group(T: PermGroup, k: int, caps: Caps | None = None) -> PermGroup:
    nt = T.degree
    return PermGroup(nt * k, [embed(t, [b], nt, k) for b in range(k) for t in T.gen_tuples], caps=caps)


def factor_subgroups(T: PermGroup, k: int, caps: Caps | None = None) -> list[PermGroup]:
    """The k coordinate copies of T inside the base group."""
    nt = T.degree
    return [PermGroup(nt * k, [embed(t, [b], nt, k) for t in T.gen_tuples], caps=caps) for b in range(k)]


def wreath_example(T: PermGroup, H: PermGroup, caps: Caps | None = None) -> FamilySpec:
    """``A = T wr H``, ``G = T^k``, ``U`` = full factors in coordinates
    ``0..k-3`` and the straight diagonal of the last two coordinates."""
    caps = resolve(caps)
    k = H.degree
    if k < 2:
        raise ValidationError("wreath example needs k >= 2")
    nt = T.degree
    A = wreath_product(T, H, caps)
    G = base_group(T, k, caps)
    ugens = [embed(t, [b], nt, k) for b in range(k - 2) for t in T.gen_tuples]
    ugens += [embed(t, [k - 2, k - 1], nt, k) for t in T.gen_tuples]
    U = PermGroup(nt * k, ugens, caps=caps)
    if G.order() != U.order() * T.order():
        raise AssertionError("|G:U| differs from |T|")
    params = {"T_degree": nt, "T_order": T.order(), "H_order": H.order(), "k": k}
    extras = {"T": T, "H": H, "factors": factor_subgroups(T, k, caps)}
    return FamilySpec("wreath", params, A, G, U, extras)
