"""Permutations of {0, ..., n-1} stored as image tables.

Composition is left to right: ``p * q`` maps ``i`` to ``q(p(i))``, so
conjugation reads ``x.conj(a) == ~a * x * a`` (the ``x^a`` of the
literature).  Points are 0-based internally; the text helpers default to
1-based notation because that is what users type.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import InputError


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power_base(n: int) -> int | None:
    """Return ``p`` if ``n == p**e`` with ``e >= 1``, else None."""
    if n < 2:
        return None
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n == 0:
                raise InputError("permutation degree must be positive")
            seen = [False] * n
            for v in images:
                if not (0 <= v < n) or seen[v]:
                    raise InputError(f"not a permutation of 0..{n - 1}: {images!r}")
                seen[v] = True
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise InputError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise InputError(f"point {a} repeated")
                seen.add(a)
            for idx, a in enumerate(cyc):
                img[a] = cyc[(idx + 1) % len(cyc)]
        return cls(img, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return inverse(self) ** (-k)
        result = tuple(range(self.degree))
        base = self.images
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation(result, check=False)

    def conj(self, a: "Permutation") -> "Permutation":
        """``a^-1 * self * a``."""
        return Permutation(_conj(self.images, a.images), check=False)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i == v]

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i != v]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each led by its least point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths (fixed points included) in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    @property
    def order(self) -> int:
        return element_order(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self, base=0)}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)


# Raw tuple kernels.  Hot loops elsewhere call these directly.

def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(map(b.__getitem__, a))


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def _conj(x: tuple, a: tuple) -> tuple:
    # (a^-1 x a) sends a(i) to a(x(i))
    out = [0] * len(x)
    for i, v in enumerate(x):
        out[a[i]] = a[v]
    return tuple(out)


def _order(a: tuple) -> int:
    seen = [False] * len(a)
    lengths = set()
    for i in range(len(a)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            n += 1
        lengths.add(n)
    return reduce(math.lcm, lengths, 1)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise InputError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(_mul(p.images, q.images), check=False)


def inverse(p: Permutation) -> Permutation:
    return Permutation(_inv(p.images), check=False)


def element_order(p: Permutation) -> int:
    """Least common multiple of the cycle lengths."""
    return _order(p.images)


def prime_power_order(p: Permutation) -> bool:
    """True iff the order is ``q**e`` for one prime ``q``; the identity counts (``e = 0``)."""
    n = element_order(p)
    return n == 1 or prime_power_base(n) is not None


def order_prime(p: Permutation) -> int | None:
    """The prime ``q`` with ``|p| = q**e``, ``e >= 1``; None for the identity.

    Raises ValueError when the order is not a prime power.
    """
    n = element_order(p)
    if n == 1:
        return None
    q = prime_power_base(n)
    if q is None:
        raise ValueError(f"order {n} is not a prime power")
    return q


# -- cycle notation -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_cycles(text: str, degree: int, base: int = 1) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Points are separated by whitespace (commas are tolerated).  ``base`` is
    the number of the first point, 1 for user-facing text.  Errors carry the
    0-based column of the offending token.
    """
    if degree <= 0:
        raise InputError("degree must be positive")
    cycles: list[list[int]] = []
    current: list[int] | None = None
    seen: set[int] = set()
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace, already stripped
            break
        col = m.start(m.lastindex)
        opening, closing, number, comma, junk = m.groups()
        if junk is not None:
            raise InputError(f"column {col}: unexpected character {junk!r}")
        if opening:
            if current is not None:
                raise InputError(f"column {col}: nested '('")
            current = []
        elif closing:
            if current is None:
                raise InputError(f"column {col}: ')' without matching '('")
            if len(current) > 1:
                cycles.append(current)
            current = None
        elif number is not None:
            if current is None:
                raise InputError(f"column {col}: point outside a cycle")
            v = int(number) - base
            if not 0 <= v < degree:
                raise InputError(f"column {col}: point {number} out of range for degree {degree}")
            if v in seen:
                raise InputError(f"column {col}: point {number} repeated")
            seen.add(v)
            current.append(v)
        elif comma:
            if current is None:
                raise InputError(f"column {col}: ',' outside a cycle")
        pos = m.end()
    if current is not None:
        raise InputError(f"column {len(text)}: unterminated cycle")
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation, base: int = 1) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(a + base) for a in c) + ")" for c in cycles)


def parse_perm_file(text: str) -> list[Permutation]:
    """Read the plain-text list format: a ``degree: n`` header then one permutation per line.

    Blank lines and ``#`` comments are ignored.
    """
    degree = None
    perms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s*:\s*(\d+)", line)
            if not m:
                raise InputError(f"line {lineno}: expected 'degree: n' header")
            degree = int(m.group(1))
            continue
        try:
            perms.append(parse_cycles(line, degree))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise InputError("missing 'degree: n' header")
    return perms


def format_perm_file(perms: Sequence[Permutation], degree: int) -> str:
    lines = [f"degree: {degree}"]
    lines += [format_cycles(p) for p in perms]
    return "\n".join(lines) + "\n"
