"""ConvergenceReport: the convergence figures of one origin, as a flat record."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Optional

from core.convergence.formulas import (
    inactive_player,
    recurrence_bound,
    shot_vector_to_P,
    target_of,
    time_to_P,
)
from core.game.models import Configuration
from core.game.rules import params_of
from core.order.shots import ShotVector


@dataclass(frozen=True)
class ConvergenceReport:
    origin: Configuration
    target: Configuration
    inactive_player: int
    shot_to_target: ShotVector
    steps: int
    recurrence_bound: Optional[int]

    def to_record(self) -> Dict[str, object]:
        return {
            "origin": str(self.origin),
            "target": str(self.target),
            "inactive_player": self.inactive_player,
            "shot_to_target": str(self.shot_to_target),
            "steps": self.steps,
            "recurrence_bound": self.recurrence_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_record().items():
            lines.append(f"{key}={'none' if value is None else value}")
        return "\n".join(lines) + "\n"


def convergence_report(origin: Configuration) -> ConvergenceReport:
    params = params_of(origin)
    target = target_of(origin)
    return ConvergenceReport(
        origin=origin,
        target=target,
        inactive_player=inactive_player(origin, target),
        shot_to_target=shot_vector_to_P(origin),
        steps=time_to_P(origin),
        recurrence_bound=recurrence_bound(origin) if params.q > 0 else None,
    )


__all__ = ["ConvergenceReport", "convergence_report"]
