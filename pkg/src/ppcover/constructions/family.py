from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..group import PermGroup


@dataclass
class FamilySpec:
    """A built example triple plus the parameters that produced it."""

    family: str  # "affine" | "extraspecial" | "wreath"
    params: dict
    A: PermGroup
    G: PermGroup
    U: PermGroup
    extras: dict = field(default_factory=dict)
    normal: bool = True  # False for the Sylow examples, where G is not normal in A

    @cached_property
    def triple(self):
        from ..covering import GroupTriple

        return GroupTriple(self.A, self.G, self.U, require_normal=self.normal)

    def manifest(self) -> dict:
        t = self.triple
        out = {
            "family": self.family,
            "params": self.params,
            "degree": self.A.degree,
            "order_A": self.A.order(),
            "order_G": self.G.order(),
            "order_U": self.U.order(),
            "n": t.n,
            "index_G_U": t.index_G_U,
        }
        for key in ("u_choices",):
            if key in self.extras:
                out[key] = self.extras[key]
        return out
