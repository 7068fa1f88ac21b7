"""Brute-force reference computations, independent of the stabilizer-chain code.

Everything here works on plain image tuples and explicit element sets, so it
is only usable on small groups.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


def mul(a, b):
    # left-to-right: apply a, then b
    return tuple(b[i] for i in a)


def inv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def conj(x, a):
    return mul(mul(inv(a), x), a)


def closure(gens, degree):
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def order_of(a):
    e = tuple(range(len(a)))
    k, x = 1, a
    while x != e:
        x = mul(x, a)
        k += 1
    return k


def is_prime_power(n):
    if n == 1:
        return True
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


def classes(A_elems, G_elems):
    """Orbits of A on G under conjugation, as frozensets."""
    left = set(G_elems)
    out = []
    while left:
        x = min(left)
        cls = frozenset(conj(x, a) for a in A_elems)
        out.append(cls)
        left -= cls
    return out


def pp_classes_met(A_elems, G_elems, U_elems):
    """(number of prime-power A-classes of G, number of those meeting U)."""
    pp = [c for c in classes(A_elems, G_elems) if is_prime_power(order_of(next(iter(c))))]
    U = set(U_elems)
    return len(pp), sum(1 for c in pp if c & U)


def ambient_covered(A_elems, G_elems, U_elems):
    """P_A(U) = P_A(G) computed from A-classes of A, with no normality assumption."""
    A = set(A_elems)
    seen_G, seen_U = set(), set()
    for src, dst in ((G_elems, seen_G), (U_elems, seen_U)):
        for x in src:
            if is_prime_power(order_of(x)):
                dst.add(min(conj(x, a) for a in A))
    return seen_G == seen_U


def is_block(B, gens):
    """Every image of B under the group equals B or misses it.

    Comparing images with B alone suffices, and a block has at most
    degree/|B| distinct images, which bounds the search.
    """
    start = frozenset(B)
    limit = len(gens[0]) // len(start) if gens else 1
    images = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for X in frontier:
            for g in gens:
                Y = frozenset(g[x] for x in X)
                if Y in images:
                    continue
                if Y & start or len(images) >= limit:
                    return False
                images.add(Y)
                nxt.append(Y)
        frontier = nxt
    return True


def has_nontrivial_block(gens, degree):
    """Exhaustive search over all subsets containing 0 with proper size dividing degree."""
    others = range(1, degree)
    for size in range(2, degree):
        if degree % size:
            continue
        for rest in combinations(others, size - 1):
            if is_block({0, *rest}, gens):
                return True
    return False


def core(A_elems, U_elems):
    U = set(U_elems)
    out = set(U)
    for a in A_elems:
        out &= {conj(u, a) for u in U}
    return out


def normal_closure(A_elems, S, degree):
    gens = {conj(s, a) for s in S for a in A_elems}
    return closure(list(gens), degree)


def all_subgroups(elems, degree):
    """Every subgroup, by closing known subgroups under one extra element until nothing new appears."""
    elems = sorted(elems)
    found = {frozenset(closure([], degree))}
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            gens = sorted(S)
            for x in elems:
                if x not in S:
                    H = frozenset(closure(gens + [x], degree))
                    if H not in found:
                        found.add(H)
                        nxt.append(H)
        frontier = nxt
    return found


def lcm(a, b):
    return a * b // gcd(a, b)
