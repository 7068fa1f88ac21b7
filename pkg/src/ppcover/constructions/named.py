"""Standard small groups used as built-ins and corpus seeds."""

from __future__ import annotations

from ..errors import InputError
from ..group import PermGroup, alternating_group, cyclic_group, dihedral_group, symmetric_group
from ..perm import is_prime, parse_cycles
from .field import primitive_root


def _cycles(degree: int, *texts: str) -> PermGroup:
    return PermGroup(degree, [parse_cycles(t, degree) for t in texts])


def mobius_group(p: int, full: bool = False) -> PermGroup:
    """PSL(2, p) (or PGL(2, p) with ``full``) on the projective line, infinity = point p."""
    if not is_prime(p) or p < 3:
        raise InputError("p must be an odd prime")
    inf = p
    w = primitive_root(p)

    def images(f):
        return tuple(f(z) for z in range(p + 1))

    def shift(z):
        return inf if z == inf else (z + 1) % p

    def scale(c):
        return lambda z: inf if z == inf else (c * z) % p

    def invert(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, -1, p)) % p

    gens = [images(shift), images(scale(w * w % p)), images(invert)]
    if full:
        gens.append(images(scale(w)))
    return PermGroup(p + 1, gens)


def affine_line(p: int, multiplier_order: int | None = None) -> PermGroup:
    """``z -> a z + b`` over F_p with ``a`` in the subgroup of F_p^* of the given order."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    k = p - 1 if multiplier_order is None else multiplier_order
    if (p - 1) % k:
        raise InputError("multiplier order must divide p - 1")
    gens = [tuple((z + 1) % p for z in range(p))]
    a = pow(primitive_root(p), (p - 1) // k, p)
    if a != 1:
        gens.append(tuple(a * z % p for z in range(p)))
    return PermGroup(p, gens)


def mathieu_11() -> PermGroup:
    return _cycles(11, "(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)")


def mathieu_12() -> PermGroup:
    return _cycles(12, "(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)", "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)")


def quaternion_regular() -> PermGroup:
    """Q8 acting on itself: points 1, i, j, k, -1, -i, -j, -k as 1..8."""
    return _cycles(8, "(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)")


def klein_regular() -> PermGroup:
    return _cycles(4, "(1 2)(3 4)", "(1 3)(2 4)")


BUILDERS = {
    "c2": lambda: cyclic_group(2),
    "c3": lambda: cyclic_group(3),
    "c4": lambda: cyclic_group(4),
    "c5": lambda: cyclic_group(5),
    "v4": klein_regular,
    "d8": lambda: dihedral_group(4),
    "q8": quaternion_regular,
    "sym2": lambda: symmetric_group(2),
    "sym3": lambda: symmetric_group(3),
    "sym4": lambda: symmetric_group(4),
    "sym5": lambda: symmetric_group(5),
    "sym6": lambda: symmetric_group(6),
    "alt3": lambda: alternating_group(3),
    "alt4": lambda: alternating_group(4),
    "alt5": lambda: alternating_group(5),
    "alt6": lambda: alternating_group(6),
    "agl15": lambda: affine_line(5),
    "agl17": lambda: affine_line(7),
    "psl25": lambda: mobius_group(5),
    "pgl25": lambda: mobius_group(5, True),
    "psl27": lambda: mobius_group(7),
    "pgl27": lambda: mobius_group(7, True),
    "m11": mathieu_11,
    "m12": mathieu_12,
}
