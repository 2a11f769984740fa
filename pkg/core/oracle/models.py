from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.game.models import Configuration, GameParams


def _plain(value: object) -> object:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class PathCap:
    max_paths: int = 100_000
    max_length: int = 1_000


@dataclass(frozen=True)
class PathEnumeration:
    source: Configuration
    target: Configuration
    paths: Tuple[Tuple[int, ...], ...]
    circuit_free_only: bool
    cap: PathCap
    reachable: bool = True

    def __len__(self) -> int:
        return len(self.paths)


@dataclass
class VerificationOutcome:
    check_name: str
    params: GameParams
    origin: Optional[Configuration] = None
    instances_checked: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)
    inconclusive: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def key(self) -> Tuple[int, int, str, Tuple[int, ...]]:
        return (self.params.p, self.params.n, self.check_name, self.origin.cards if self.origin else ())

    def fail(self, **info: object) -> None:
        """Record a counterexample; values are kept JSON-friendly."""
        self.failures.append({k: _plain(v) for k, v in info.items()})

    def to_record(self) -> Dict[str, object]:
        return {
            "check": self.check_name,
            "n": self.params.n,
            "p": self.params.p,
            "origin": str(self.origin) if self.origin else None,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "details": self.details,
        }
