"""Tri-state outcomes of emptiness searches."""
from __future__ import annotations

from dataclasses import dataclass

from ..patterns import Pattern


@dataclass(frozen=True)
class EmptyAt:
    """No pattern on the ball of this radius is valid, so the subshift is empty."""

    radius: int
    decided = True

    def describe(self) -> str:
        return f"EMPTY at radius ≤ {self.radius}"

    def to_json(self) -> dict:
        return {"verdict": "empty", "radius": self.radius}


@dataclass(frozen=True)
class NonemptyWitness:
    """A configuration certifying nonemptiness.

    ``kind`` is ``"fixed-point"`` (witness is a symbol), ``"periodic"``
    (witness is one period of a periodic configuration, with its period
    lattice given by ``period``), or ``"finite-group"`` (a full configuration).
    """

    kind: str
    witness: object
    period: tuple = ()
    decided = True

    def describe(self) -> str:
        if self.kind == "fixed-point":
            return f"NONEMPTY: fixed point, symbol {self.witness}"
        if self.kind == "periodic":
            return f"NONEMPTY: periodic configuration with periods {list(self.period)}"
        return "NONEMPTY: valid configuration on the whole group"

    def to_json(self) -> dict:
        w = self.witness.to_json() if isinstance(self.witness, Pattern) else self.witness
        d = {"verdict": "nonempty", "kind": self.kind, "witness": w}
        if self.period:
            d["period"] = list(self.period)
        return d


@dataclass(frozen=True)
class Unknown:
    """Budget spent without a decision."""

    reason: str
    decided = False

    def describe(self) -> str:
        return f"UNKNOWN: {self.reason}"

    def to_json(self) -> dict:
        return {"verdict": "unknown", "reason": self.reason}
