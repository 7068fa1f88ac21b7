"""Affine groups ``C_p^d : H`` acting on the p^d vectors of F_p^d."""

from __future__ import annotations

from typing import Sequence

from ..config import Caps, resolve
from ..errors import CapExceeded, InputError, ValidationError
from ..group import PermGroup
from .family import FamilySpec
from .field import (
    Matrix,
    check_prime,
    companion_matrix,
    decode,
    encode,
    gl_generators,
    has_order,
    mat_mul,
    primitive_polynomial,
    span,
    transvection,
    vec_mat,
)


def matrix_perm(m: Matrix, p: int) -> tuple:
    d = len(m)
    return tuple(encode(vec_mat(decode(c, d, p), m, p), p) for c in range(p**d))


def translation_perm(v, p: int) -> tuple:
    d = len(v)
    out = []
    for c in range(p**d):
        w = decode(c, d, p)
        out.append(encode([(a + b) % p for a, b in zip(w, v)], p))
    return tuple(out)


def basis_vector(d: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(d))


def translation_group(d: int, p: int, vectors=None, caps: Caps | None = None) -> PermGroup:
    if vectors is None:
        vectors = [basis_vector(d, i) for i in range(d)]
    return PermGroup(p**d, [translation_perm(v, p) for v in vectors], caps=caps)


def linear_group(d: int, p: int, matrices: Sequence[Matrix], caps: Caps | None = None) -> PermGroup:
    """Matrix group acting on all p^d vectors (the zero vector is fixed)."""
    return PermGroup(p**d, [matrix_perm(m, p) for m in matrices], caps=caps)


def affine_group(d: int, p: int, matrices: Sequence[Matrix], caps: Caps | None = None) -> PermGroup:
    gens = [translation_perm(basis_vector(d, i), p) for i in range(d)]
    gens += [matrix_perm(m, p) for m in matrices]
    return PermGroup(p**d, gens, caps=caps)


def singer_matrix(d: int, p: int) -> Matrix:
    """Companion matrix of the least primitive polynomial; order p^d - 1."""
    m = companion_matrix(primitive_polynomial(d, p), p)
    if not has_order(m, p**d - 1, p):
        raise AssertionError("Singer matrix has the wrong order")
    return m


def unitriangular_generators(d: int, p: int) -> list[Matrix]:
    """Superdiagonal transvections; they generate the upper unitriangular group."""
    return [transvection(d, i, i + 1, p) for i in range(d - 1)]


def nonzero_orbit_size(d: int, p: int, matrices: Sequence[Matrix]) -> int:
    start = encode(basis_vector(d, 0), p)
    seen = {start}
    queue = [start]
    perms = [matrix_perm(m, p) for m in matrices]
    for x in queue:
        for g in perms:
            if g[x] not in seen:
                seen.add(g[x])
                queue.append(g[x])
    return len(seen)


def sharply_two_transitive(q: int, caps: Caps | None = None) -> PermGroup:
    """AGL(1, q) for a prime power q, realized as F_p^e : <Singer cycle>."""
    from ..perm import prime_power_base

    p = prime_power_base(q)
    if p is None:
        raise InputError(f"{q} is not a prime power")
    e = 0
    while p**e < q:
        e += 1
    return affine_group(e, p, [singer_matrix(e, p)], caps)


def _resolve_h(d: int, p: int, H) -> tuple[str, list[Matrix]]:
    if H == "full":
        return "full", gl_generators(d, p)
    if H == "singer":
        return "singer", [singer_matrix(d, p)]
    mats = [tuple(tuple(int(x) % p for x in row) for row in m) for m in H]
    for m in mats:
        if len(m) != d or any(len(r) != d for r in m):
            raise InputError(f"matrix is not {d}x{d}")
    return "custom", mats


def affine_example(
    d: int,
    p: int,
    H="full",
    U: Sequence[Sequence[int]] | None = None,
    caps: Caps | None = None,
) -> FamilySpec:
    """``A = C_p^d : H``, ``G`` the translations, ``U`` the translations by a subspace.

    ``U`` is given by spanning vectors and defaults to the line through the
    first basis vector.  ``H`` must be transitive on nonzero vectors.
    """
    caps = resolve(caps)
    check_prime(p)
    if d < 1:
        raise InputError("dimension must be positive")
    if p**d > caps.degree:
        raise CapExceeded("degree", caps.degree, p**d, "affine space")
    tag, mats = _resolve_h(d, p, H)
    orbit = nonzero_orbit_size(d, p, mats)
    if orbit != p**d - 1:
        raise ValidationError(f"H is not transitive on nonzero vectors (orbit of size {orbit})")
    if U is None:
        U = [basis_vector(d, 0)]
    U = [tuple(int(x) % p for x in v) for v in U]
    sub = span(U, d, p)
    if len(sub) == 1 or len(sub) == p**d:
        raise ValidationError("U must be a proper nonzero subspace")
    A = affine_group(d, p, mats, caps)
    G = translation_group(d, p, caps=caps)
    Ug = translation_group(d, p, U, caps=caps)
    params = {"d": d, "p": p, "H": tag, "U": [list(v) for v in U]}
    return FamilySpec("affine", params, A, G, Ug, {"matrices": mats})


# -- the small non-normal examples over F_2^3 ----------------------------------

def _fixed_vectors(mats: Sequence[Matrix], d: int, p: int) -> list[tuple[int, ...]]:
    out = []
    for c in range(1, p**d):
        v = decode(c, d, p)
        if all(vec_mat(v, m, p) == v for m in mats):
            out.append(v)
    return out


def agl32_sylow_example(kind: str = "d8", caps: Caps | None = None) -> FamilySpec:
    """``A = AGL(3,2)``, ``G`` a Sylow 2-subgroup (translations by unitriangular
    matrices), ``U = C_2 x D_8`` (``kind='d8'``) or ``C_2 x C_4`` (``kind='c4'``),
    the ``C_2`` being the translations centralized by the ``D_8``."""
    d, p = 3, 2
    ut = unitriangular_generators(d, p)
    A = affine_group(d, p, gl_generators(d, p), caps)
    G = PermGroup(8, [translation_perm(basis_vector(d, i), p) for i in range(d)] + [matrix_perm(m, p) for m in ut], caps=caps)
    fixed = _fixed_vectors(ut, d, p)
    if len(fixed) != 1:
        raise AssertionError("expected a unique translation centralized by D8")
    central = translation_perm(fixed[0], p)
    if kind == "d8":
        top = [matrix_perm(m, p) for m in ut]
    elif kind == "c4":
        top = [matrix_perm(mat_mul(ut[0], ut[1], p), p)]
    else:
        raise InputError(f"unknown U choice {kind!r}; use 'd8' or 'c4'")
    U = PermGroup(8, [central] + top, caps=caps)
    return FamilySpec("affine-sylow", {"d": 3, "p": 2, "U": kind}, A, G, U, normal=False)


def gl32_example(caps: Caps | None = None) -> FamilySpec:
    """``A = GL(3,2)`` on the 7 nonzero vectors, ``G = D_8`` unitriangular, ``U = C_4``."""
    d, p = 3, 2

    def on_nonzero(m):
        full = matrix_perm(m, p)
        return tuple(full[c] - 1 for c in range(1, p**d))

    ut = unitriangular_generators(d, p)
    A = PermGroup(7, [on_nonzero(m) for m in gl_generators(d, p)], caps=caps)
    G = PermGroup(7, [on_nonzero(m) for m in ut], caps=caps)
    U = PermGroup(7, [on_nonzero(mat_mul(ut[0], ut[1], p))], caps=caps)
    return FamilySpec("linear-sylow", {"d": 3, "p": 2}, A, G, U, normal=False)
