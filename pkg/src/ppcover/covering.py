"""Prime-power covering checks for triples ``U <= G <| A``.

``U`` covers when it meets every A-class of prime-power elements of ``G``,
i.e. ``P_A(U) = P_A(G)``.  The generic checker works from a full A-class
table of ``G``; the structural checker handles ``T wr H`` with the
two-coordinate diagonal subgroup without enumerating ``T^k``.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from .actions import CosetActionMap
from .classes import AClassTable, a_classes, conjugacy_classes
from .config import Caps, resolve
from .errors import CapExceeded, TheoremViolation, ValidationError
from .group import PermGroup, intersection, is_normal
from .perm import Permutation, _conj, _mul, _order, format_cycles, prime_power_base


@dataclass(frozen=True)
class GroupTriple:
    """``U <= G <= A`` on one point set.  ``G`` must be normal in ``A`` unless
    ``require_normal`` is False, in which case only the ambient mode applies."""

    A: PermGroup
    G: PermGroup
    U: PermGroup
    require_normal: bool = True
    normal: bool = field(init=False, default=True)

    def __post_init__(self):
        A, G, U = self.A, self.G, self.U
        if not (A.degree == G.degree == U.degree):
            raise ValidationError("A, G and U must act on the same points")
        if not G.is_subgroup_of(A):
            raise ValidationError("G is not a subgroup of A")
        normal = is_normal(A, G)
        if self.require_normal and not normal:
            raise ValidationError("G is not normal in A")
        object.__setattr__(self, "normal", normal)
        if not U.is_subgroup_of(G):
            raise ValidationError("U is not a subgroup of G")

    @property
    def n(self) -> int:
        return self.A.order() // self.G.order()

    @property
    def index_G_U(self) -> int:
        return self.G.order() // self.U.order()

    @property
    def proper(self) -> bool:
        return self.index_G_U > 1


@dataclass
class CoveringReport:
    verdict: str  # "covered" | "witness"
    witness: Permutation | None
    witness_order: int | None
    witness_prime: int | None
    pp_classes_total: int
    pp_classes_met: int
    n: int
    index_G_U: int
    mode: str
    met_classes: tuple[int, ...] = ()
    witness_checked: bool = False
    elapsed: float = field(default=0.0, compare=False)

    @property
    def covered(self) -> bool:
        return self.verdict == "covered"

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = {"cycles": format_cycles(self.witness), "order": self.witness_order, "prime": self.witness_prime}
        return {
            "verdict": self.verdict,
            "witness": w,
            "pp_classes_total": self.pp_classes_total,
            "pp_classes_met": self.pp_classes_met,
            "n": self.n,
            "index_G_U": self.index_G_U,
            "mode": self.mode,
        }


def _is_pp(order: int) -> bool:
    return order == 1 or prime_power_base(order) is not None


def met_classes(table: AClassTable, U: PermGroup) -> set[int]:
    """Indices of prime-power classes of the table that meet ``U``."""
    target = len(table.pp_classes())
    met: set[int] = set()
    for u in U.element_tuples():
        if _is_pp(_order(u)):
            met.add(table.class_of(u))
            if len(met) == target:
                break
    return met


def _class_misses(A: PermGroup, U: PermGroup, x: tuple, budget: int) -> bool | None:
    """Direct search of the A-class of ``x``: True if it avoids U, None if over budget."""
    uc = U.chain
    seen = {x}
    queue = [x]
    k = 0
    while k < len(queue):
        y = queue[k]
        k += 1
        if uc.contains(y):
            return False
        for a in A.gen_tuples:
            z = _conj(y, a)
            if z not in seen:
                if len(seen) >= budget:
                    return None
                seen.add(z)
                queue.append(z)
    return True


def verify_covering(
    triple: GroupTriple,
    table: AClassTable | None = None,
    caps: Caps | None = None,
    mode: str = "auto",
) -> CoveringReport:
    """Decide ``P_A(U) = P_A(G)``.

    ``generic`` works inside the A-class table of ``G`` and needs ``G`` normal
    in ``A``; ``ambient`` compares the sets of A-classes of ``A`` met by the
    prime-power elements of ``U`` and of ``G``.  ``auto`` picks generic when
    ``G`` is normal.
    """
    caps = resolve(caps)
    if mode == "auto":
        mode = "generic" if triple.normal else "ambient"
    if mode == "ambient":
        return _verify_ambient(triple, caps)
    if mode != "generic":
        raise ValidationError(f"unknown covering mode {mode!r}")
    if not triple.normal:
        raise ValidationError("generic mode needs G normal in A; use the ambient mode")
    t0 = time.perf_counter()
    A, G, U = triple.A, triple.G, triple.U
    if table is None:
        table = a_classes(A, G, caps)
    elif table.group is not G and not table.group.equals(G):
        raise ValidationError("class table belongs to a different group")
    pp = table.pp_classes()
    met = met_classes(table, U)
    missing = [c for c in pp if c not in met]
    witness = w_order = w_prime = None
    checked = False
    if missing:
        info = table.classes[missing[0]]
        witness, w_order, w_prime = info.rep, info.order, info.prime
        verdict = _class_misses(A, U, witness.images, caps.witness_budget)
        if verdict is False:
            raise AssertionError("witness class meets U; class table is inconsistent")
        checked = verdict is True
    return CoveringReport(
        verdict="witness" if missing else "covered",
        witness=witness,
        witness_order=w_order,
        witness_prime=w_prime,
        pp_classes_total=len(pp),
        pp_classes_met=len(pp) - len(missing),
        n=triple.n,
        index_G_U=triple.index_G_U,
        mode="generic",
        met_classes=tuple(sorted(met)),
        witness_checked=checked,
        elapsed=time.perf_counter() - t0,
    )


def _verify_ambient(triple: GroupTriple, caps: Caps) -> CoveringReport:
    t0 = time.perf_counter()
    A, G, U = triple.A, triple.G, triple.U
    table = conjugacy_classes(A, caps)
    target: dict[int, tuple] = {}
    for g in G.element_tuples():
        if _is_pp(_order(g)):
            c = table.class_of(g)
            if c not in target:
                target[c] = g
    met = met_classes(table, U)
    missing = sorted(c for c in target if c not in met)
    witness = w_order = w_prime = None
    checked = False
    if missing:
        x = target[missing[0]]
        witness = Permutation(x, check=False)
        w_order = _order(x)
        w_prime = prime_power_base(w_order)
        verdict = _class_misses(A, U, x, caps.witness_budget)
        if verdict is False:
            raise AssertionError("witness class meets U; class table is inconsistent")
        checked = verdict is True
    return CoveringReport(
        verdict="witness" if missing else "covered",
        witness=witness,
        witness_order=w_order,
        witness_prime=w_prime,
        pp_classes_total=len(target),
        pp_classes_met=len(target) - len(missing),
        n=triple.n,
        index_G_U=triple.index_G_U,
        mode="ambient",
        met_classes=tuple(sorted(c for c in met if c in target)),
        witness_checked=checked,
        elapsed=time.perf_counter() - t0,
    )


# -- structural mode for T wr H ---------------------------------------------

def _wreath_point_perm(entries: Sequence[tuple], nt: int) -> Permutation:
    img = []
    for b, e in enumerate(entries):
        img.extend(b * nt + v for v in e)
    return Permutation(img, check=False)


def verify_covering_wreath(
    T: PermGroup,
    H: PermGroup,
    T_table: AClassTable | None = None,
    caps: Caps | None = None,
) -> CoveringReport:
    """Covering verdict for ``(T wr H, T^k, U)`` with ``U = T^(k-2) x diag(T)``.

    A-classes of prime-power elements of ``T^k`` are H-orbits of k-tuples
    of T-classes whose orders have prime-power lcm; such a class meets U
    iff some tuple in its orbit has equal last two entries.
    """
    caps = resolve(caps)
    t0 = time.perf_counter()
    k = H.degree
    if k < 2:
        raise ValidationError("structural wreath mode needs k >= 2")
    if not T.is_transitive():
        raise ValidationError("T must be transitive")
    if T_table is None:
        T_table = conjugacy_classes(T, caps)
    c = len(T_table)
    if c**k > caps.enumeration:
        raise CapExceeded("enumeration", caps.enumeration, c**k, "class tuples")
    orders = [ci.order for ci in T_table.classes]
    hgens = H.gen_tuples
    seen: set[tuple] = set()
    total = met = 0
    witness_tuple = None
    for tup in itertools.product(range(c), repeat=k):
        if tup in seen:
            continue
        lcm = math.lcm(*(orders[i] for i in tup))
        orbit = [tup]
        seen.add(tup)
        j = 0
        while j < len(orbit):
            t = orbit[j]
            j += 1
            for s in hgens:
                new = [0] * k
                for i, v in enumerate(t):
                    new[s[i]] = v
                new = tuple(new)
                if new not in seen:
                    seen.add(new)
                    orbit.append(new)
        if not _is_pp(lcm):
            continue
        total += 1
        if any(t[-2] == t[-1] for t in orbit):
            met += 1
        elif witness_tuple is None:
            witness_tuple = tup
    witness = w_order = w_prime = None
    checked = False
    if witness_tuple is not None:
        entries = [T_table.classes[i].rep.images for i in witness_tuple]
        witness = _wreath_point_perm(entries, T.degree)
        w_order = math.lcm(*(orders[i] for i in witness_tuple))
        w_prime = prime_power_base(w_order)
        checked = _wreath_witness_misses(T, H, entries, caps.witness_budget)
    return CoveringReport(
        verdict="witness" if witness_tuple is not None else "covered",
        witness=witness,
        witness_order=w_order,
        witness_prime=w_prime,
        pp_classes_total=total,
        pp_classes_met=met,
        n=H.order(),
        index_G_U=T.order(),
        mode="structural-wreath",
        witness_checked=checked,
        elapsed=time.perf_counter() - t0,
    )


def _wreath_witness_misses(T: PermGroup, H: PermGroup, entries: list[tuple], budget: int) -> bool:
    """Element-level re-check: no H-image of the witness has T-conjugate last two entries."""
    if H.order() * T.order() > budget:
        return False
    telems = list(T.chain.elements())
    k = len(entries)
    for s in H.chain.elements():
        y = [None] * k
        for i, e in enumerate(entries):
            y[s[i]] = e
        a, b = y[-2], y[-1]
        if any(_conj(b, t) == a for t in telems):
            raise AssertionError("wreath witness is conjugate into U")
    return True


def compare_modes(T: PermGroup, H: PermGroup, caps: Caps | None = None) -> tuple[CoveringReport, CoveringReport]:
    """Run the generic checker on the imprimitive realization and the structural one."""
    from .constructions.wreath import wreath_example

    spec = wreath_example(T, H, caps=caps)
    generic = verify_covering(spec.triple, caps=caps)
    structural = verify_covering_wreath(T, H, caps=caps)
    return generic, structural


def cross_validate(T: PermGroup, H: PermGroup, caps: Caps | None = None) -> bool:
    generic, structural = compare_modes(T, H, caps)
    return (
        generic.verdict == structural.verdict
        and generic.pp_classes_total == structural.pp_classes_total
        and generic.pp_classes_met == structural.pp_classes_met
        and generic.n == structural.n
        and generic.index_G_U == structural.index_G_U
    )


# -- derangements -------------------------------------------------------------

CLASS_ROUTE_LIMIT = 50_000
RANDOM_SAMPLES = 20_000


def _is_pp_derangement(g: tuple) -> bool:
    for i, v in enumerate(g):
        if i == v:
            return False
    return _is_pp(_order(g))


def prime_power_derangement(G: PermGroup, caps: Caps | None = None, seed: int = 0) -> Permutation:
    """A fixed-point-free element of prime-power order of a transitive group.

    Small groups: conjugacy class representatives by increasing order.
    Larger groups: seeded uniform sampling through the stabilizer chain,
    then exhaustive enumeration.  Failure means FKS was contradicted.
    """
    caps = resolve(caps)
    if G.degree < 2 or not G.is_transitive():
        raise ValidationError("derangement search needs a transitive group of degree >= 2")
    n = G.order()
    if n <= min(CLASS_ROUTE_LIMIT, caps.enumeration):
        table = conjugacy_classes(G, caps)
        for c in table.classes:
            if c.order > 1 and c.prime_power and not c.rep.fixed_points():
                return c.rep
        raise TheoremViolation(f"no prime-power derangement in a transitive group of order {n}")
    rng = random.Random(seed)
    levels = G.chain.levels
    ident = tuple(range(G.degree))
    for _ in range(RANDOM_SAMPLES):
        g = ident
        for lvl in reversed(levels):
            g = _mul(g, lvl.trans[lvl.orbit[rng.randrange(len(lvl.orbit))]])
        if _is_pp_derangement(g):
            return Permutation(g, check=False)
    for g in G.element_tuples():
        if _is_pp_derangement(g):
            return Permutation(g, check=False)
    raise TheoremViolation(f"no prime-power derangement in a transitive group of order {n}")


# -- reductions -----------------------------------------------------------------

@dataclass
class ReducedTriple:
    triple: GroupTriple
    action: CosetActionMap
    kernel: PermGroup


def core_reduction(triple: GroupTriple, caps: Caps | None = None) -> ReducedTriple:
    """Pass to the faithful action of A on [A:U]; U becomes the stabilizer of coset 0."""
    act = CosetActionMap(triple.A, triple.U, caps)
    A_hat = act.image_group()
    G_hat = act.image_of(triple.G)
    U_hat = G_hat.point_stabilizer(0)
    kernel = act.kernel()
    reduced = GroupTriple(A_hat, G_hat, U_hat, require_normal=triple.require_normal)
    if reduced.index_G_U != triple.index_G_U or reduced.n != triple.n:
        raise AssertionError("core reduction changed an index")
    if A_hat.order() * kernel.order() != triple.A.order():
        raise AssertionError("kernel order inconsistent with image order")
    return ReducedTriple(reduced, act, kernel)


def normal_restriction_check(triple: GroupTriple, X: PermGroup, caps: Caps | None = None) -> bool:
    """``P_A(X) == P_A(U ∩ X)`` for ``X <= G`` normal in ``A``."""
    if not X.is_subgroup_of(triple.G):
        raise ValidationError("X is not a subgroup of G")
    if not is_normal(triple.A, X):
        raise ValidationError("X is not normal in A")
    UX = intersection(triple.U, X, caps)
    return verify_covering(GroupTriple(triple.A, X, UX), caps=caps).covered
