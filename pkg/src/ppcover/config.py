from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Size limits; every algorithm that enumerates checks against these."""

    enumeration: int = 2**20
    degree: int = 10**4
    lattice: int = 10**3
    backtrack_steps: int = 2_000_000
    witness_budget: int = 200_000

    def __post_init__(self):
        for name in ("enumeration", "degree", "lattice", "backtrack_steps", "witness_budget"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name} must be positive")

    def with_(self, **kw) -> "Caps":
        return replace(self, **kw)


DEFAULT_CAPS = Caps()


def resolve(caps: Caps | None) -> Caps:
    return DEFAULT_CAPS if caps is None else caps
