"""Arithmetic operation counters threaded through the kernels."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass
class OpCounter:
    """Tallies ``add`` (incl. subtraction), ``mul`` and ``div`` per phase."""

    counts: Counter = field(default_factory=Counter)

    def tally(self, phase: str, add: int = 0, mul: int = 0, div: int = 0) -> None:
        if add:
            self.counts[phase, "add"] += add
        if mul:
            self.counts[phase, "mul"] += mul
        if div:
            self.counts[phase, "div"] += div

    def _total(self, kind, phase=None):
        return sum(v for (p, kd), v in self.counts.items()
                   if kd == kind and (phase is None or p == phase))

    def add(self, phase=None) -> int:
        return self._total("add", phase)

    def mul(self, phase=None) -> int:
        return self._total("mul", phase)

    def div(self, phase=None) -> int:
        return self._total("div", phase)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def phases(self):
        return sorted({p for p, _ in self.counts})

    def as_dict(self) -> dict:
        return {"add": self.add(), "mul": self.mul(), "div": self.div(), "total": self.total}
