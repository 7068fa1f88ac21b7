"""A-classes of a normal subgroup and the prime-power class counts m(G), m0(G)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import Caps
from .errors import CapExceeded, ValidationError
from .group import PermGroup, is_normal
from .perm import Permutation, _conj, _order, format_cycles, prime_factors, prime_power_base


@dataclass(frozen=True)
class ClassInfo:
    rep: Permutation
    size: int
    order: int
    prime_power: bool
    prime: int | None  # None for the identity class and for non prime-power classes


class AClassTable:
    """Partition of ``G`` into orbits of ``A`` acting by conjugation.

    Classes are sorted by (element order, size, enumeration index of the
    representative); the representative is the first class member in the
    enumeration order of ``G``.
    """

    def __init__(self, A: PermGroup, G: PermGroup, classes, elements, class_index):
        self.ambient = A
        self.group = G
        self.classes: list[ClassInfo] = classes
        self._elements = elements
        self._position = {e: i for i, e in enumerate(elements)}
        self._class_index = class_index

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def class_of(self, x) -> int:
        t = x.images if isinstance(x, Permutation) else tuple(x)
        i = self._position.get(t)
        if i is None:
            raise ValidationError("element is not in the normal subgroup")
        return self._class_index[i]

    def members(self, c: int) -> list[Permutation]:
        return [Permutation(e, check=False) for e, k in zip(self._elements, self._class_index) if k == c]

    def pp_classes(self) -> list[int]:
        return [i for i, c in enumerate(self.classes) if c.prime_power]

    @property
    def identity_class(self) -> int:
        return 0  # order 1 sorts first

    def to_tsv(self) -> str:
        rows = ["class_index\trep_cycles\tsize\torder\tprime_power\tprime"]
        for i, c in enumerate(self.classes):
            rows.append(
                f"{i}\t{format_cycles(c.rep)}\t{c.size}\t{c.order}\t"
                f"{'yes' if c.prime_power else 'no'}\t{'' if c.prime is None else c.prime}"
            )
        return "\n".join(rows) + "\n"


def a_classes(A: PermGroup, G: PermGroup, caps: Caps | None = None, check_normal: bool = True) -> AClassTable:
    if check_normal and not is_normal(A, G):
        raise ValidationError("G is not normal in A")
    limit = (caps or G.caps).enumeration
    if G.order() > limit:
        raise CapExceeded("enumeration", limit, G.order(), "class table")
    elements = list(G.chain.elements())
    position = {e: i for i, e in enumerate(elements)}
    agens = A.gen_tuples
    raw = [-1] * len(elements)
    found = []  # (rep index, size)
    for i, e in enumerate(elements):
        if raw[i] >= 0:
            continue
        c = len(found)
        raw[i] = c
        queue = [e]
        size = 1
        k = 0
        while k < len(queue):
            x = queue[k]
            k += 1
            for a in agens:
                y = _conj(x, a)
                j = position.get(y)
                if j is None:
                    raise ValidationError("G is not normal in A")
                if raw[j] < 0:
                    raw[j] = c
                    queue.append(y)
                    size += 1
        found.append((i, size))
    infos = []
    for rep_idx, size in found:
        o = _order(elements[rep_idx])
        p = prime_power_base(o)
        infos.append((o, size, rep_idx, p))
    order_key = sorted(range(len(infos)), key=lambda c: infos[c][:3])
    remap = {old: new for new, old in enumerate(order_key)}
    classes = []
    for old in order_key:
        o, size, rep_idx, p = infos[old]
        classes.append(ClassInfo(Permutation(elements[rep_idx], check=False), size, o, o == 1 or p is not None, p))
    class_index = [remap[c] for c in raw]
    return AClassTable(A, G, classes, elements, class_index)


def conjugacy_classes(G: PermGroup, caps: Caps | None = None) -> AClassTable:
    return a_classes(G, G, caps, check_normal=False)


def prime_power_class_reps(table: AClassTable) -> dict[int, list[int]]:
    """For each prime dividing |G|, the classes of elements of p-power order (identity included)."""
    out = {}
    for p in prime_factors(table.group.order()):
        out[p] = [i for i, c in enumerate(table.classes) if c.order == 1 or c.prime == p]
    return out


@dataclass(frozen=True)
class MInvariantReport:
    counts: dict[int, int]  # prime -> number of p-power classes, identity included
    m: int
    primes: tuple[int, ...]
    counts_excluding_identity: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "primes": list(self.primes),
            "counts": {str(p): n for p, n in self.counts.items()},
            "counts_excluding_identity": {str(p): n for p, n in self.counts_excluding_identity.items()},
        }


def m_invariant(A: PermGroup, G: PermGroup, caps: Caps | None = None, table: AClassTable | None = None) -> MInvariantReport:
    """Max over primes p of the number of A-classes of p-elements of G.

    With ``A = G`` this is m0(G); with ``A`` inducing Aut(G) it is m(G).
    """
    if table is None:
        table = a_classes(A, G, caps)
    per_prime = prime_power_class_reps(table)
    counts = {p: len(v) for p, v in per_prime.items()}
    if not counts:
        return MInvariantReport({}, 1, (), {})
    m = max(counts.values())
    primes = tuple(p for p, n in counts.items() if n == m)
    return MInvariantReport(counts, m, primes, {p: n - 1 for p, n in counts.items()})
