"""Small matrices over F_p and the vector encoding used by the affine builders.

Vectors of F_p^d are encoded as integers ``sum(v[i] * p**i)``; matrices act
on row vectors, ``v -> v M``.
"""

from __future__ import annotations

import itertools

from ..errors import InputError
from ..perm import is_prime, prime_factors

Matrix = tuple[tuple[int, ...], ...]


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise InputError(f"{p} is not prime")


def encode(v, p: int) -> int:
    return sum(x * p**i for i, x in enumerate(v))


def decode(code: int, d: int, p: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


def identity_matrix(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) % p for j in range(d))
        for i in range(d)
    )


def mat_pow(m: Matrix, e: int, p: int) -> Matrix:
    result = identity_matrix(len(m))
    while e:
        if e & 1:
            result = mat_mul(result, m, p)
        m = mat_mul(m, m, p)
        e >>= 1
    return result


def vec_mat(v, m: Matrix, p: int) -> tuple[int, ...]:
    d = len(m)
    return tuple(sum(v[k] * m[k][j] for k in range(d)) % p for j in range(d))


def determinant(m: Matrix, p: int) -> int:
    d = len(m)
    rows = [list(r) for r in m]
    det = 1
    for c in range(d):
        piv = next((r for r in range(c, d) if rows[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det = det * rows[c][c] % p
        inv = pow(rows[c][c], -1, p)
        for r in range(c + 1, d):
            f = rows[r][c] * inv % p
            if f:
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[c])]
    return det % p


def matrix_order(m: Matrix, p: int, bound: int | None = None) -> int:
    """Multiplicative order of an invertible matrix (by repeated multiplication)."""
    if determinant(m, p) == 0:
        raise InputError("matrix is singular")
    ident = identity_matrix(len(m))
    bound = bound or p ** (len(m) ** 2)
    x = m
    k = 1
    while x != ident:
        x = mat_mul(x, m, p)
        k += 1
        if k > bound:
            raise AssertionError("matrix order exceeds the group order bound")
    return k


def has_order(m: Matrix, n: int, p: int) -> bool:
    """True iff ``m`` has multiplicative order exactly ``n``."""
    ident = identity_matrix(len(m))
    if mat_pow(m, n, p) != ident:
        return False
    return all(mat_pow(m, n // q, p) != ident for q in prime_factors(n))


def companion_matrix(coeffs, p: int) -> Matrix:
    """Companion matrix of ``x^d + c_{d-1} x^{d-1} + ... + c_0`` with ``coeffs = (c_0, ..., c_{d-1})``."""
    d = len(coeffs)
    rows = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        rows[i][i + 1] = 1
    rows[d - 1] = [(-c) % p for c in coeffs]
    return tuple(tuple(r) for r in rows)


def primitive_polynomial(d: int, p: int) -> tuple[int, ...]:
    """Least coefficient tuple ``(c_0, ..., c_{d-1})`` whose companion matrix has order ``p^d - 1``."""
    check_prime(p)
    target = p**d - 1
    for coeffs in itertools.product(range(p), repeat=d):
        if coeffs[0] == 0:
            continue
        if target == 1 or has_order(companion_matrix(coeffs, p), target, p):
            return coeffs
    raise AssertionError(f"no primitive polynomial of degree {d} over F_{p}")


def primitive_root(p: int) -> int:
    check_prime(p)
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("no primitive root")


def transvection(d: int, i: int, j: int, p: int, a: int = 1) -> Matrix:
    rows = [list(r) for r in identity_matrix(d)]
    rows[i][j] = a % p
    return tuple(tuple(r) for r in rows)


def diagonal(entries, p: int) -> Matrix:
    d = len(entries)
    return tuple(tuple(entries[i] % p if i == j else 0 for j in range(d)) for i in range(d))


def gl_generators(d: int, p: int) -> list[Matrix]:
    """Generators of GL(d, p): elementary transvections and one diagonal matrix of
    determinant a primitive root."""
    check_prime(p)
    gens = [transvection(d, i, j, p) for i in range(d) for j in range(d) if i != j]
    w = primitive_root(p)
    if w != 1:
        gens.append(diagonal([w] + [1] * (d - 1), p))
    return gens


def span(vectors, d: int, p: int) -> frozenset[int]:
    """The subspace spanned by the given vectors, as a set of codes."""
    vecs = [tuple(v) for v in vectors]
    out = {encode((0,) * d, p)}
    for coeffs in itertools.product(range(p), repeat=len(vecs)):
        s = [0] * d
        for c, v in zip(coeffs, vecs):
            for k in range(d):
                s[k] = (s[k] + c * v[k]) % p
        out.add(encode(s, p))
    return frozenset(out)


def subspaces(d: int, p: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every subspace of F_p^d as a tuple of basis vectors, ordered by dimension
    then by the sorted code set."""
    found: dict[frozenset[int], tuple] = {frozenset({0}): ()}
    frontier = [()]
    vectors = [decode(c, d, p) for c in range(1, p**d)]
    while frontier:
        nxt = []
        for basis in frontier:
            current = span(basis, d, p)
            for v in vectors:
                if encode(v, p) in current:
                    continue
                new_basis = basis + (v,)
                key = span(new_basis, d, p)
                if key not in found:
                    found[key] = new_basis
                    nxt.append(new_basis)
        frontier = nxt
    return [found[k] for k in sorted(found, key=lambda s: (len(s), sorted(s)))]
