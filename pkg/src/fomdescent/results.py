"""Outcome records shared by the decision procedures."""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Definable:
    """A family of witnesses satisfying the cocycle condition was found."""

    witness: Any
    tried: int
    kind: str = field(default="Definable", init=False)

    @property
    def definable(self):
        return True


@dataclass(frozen=True)
class Obstructed:
    """Every candidate assignment was tried and none satisfies the cocycle condition."""

    tried: int
    detail: Optional[str] = None
    kind: str = field(default="Obstructed", init=False)

    @property
    def definable(self):
        return False


@dataclass(frozen=True)
class NotIsomorphicToConjugate:
    """Some Galois conjugate admits no isomorphism at all."""

    sigma: Any = None
    kind: str = field(default="NotIsomorphicToConjugate", init=False)

    @property
    def definable(self):
        return None


GUARANTEED_DEFINABLE = "GuaranteedDefinable"
CYCLIC_UNRESOLVED = "CyclicUnresolved"
