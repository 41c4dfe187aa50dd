"""
============
Verification reports and verifier configuration.
============

`TheoremReport` records the outcome of one verifier: the checked domain, any counterexamples and the wall-clock
time. Reports serialise to JSON and back without loss.

`VerifyConfig` holds the bounds of every verifier. It is loaded from a JSON arguments file with `from_json`.
"""

import dataclasses
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union


class Status(str, Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    PARTIAL = "partially-checked"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    status: Status
    domain: str
    counterexamples: Tuple[Any, ...] = ()
    seconds: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "status", Status(self.status))
        object.__setattr__(self, "counterexamples", tuple(self.counterexamples))
        if (self.status is Status.REFUTED) != bool(self.counterexamples):
            raise ValueError(
                "report for {} has status {} with {} counterexamples; refuted requires at least one and "
                "the other statuses none".format(self.theorem, self.status.value, len(self.counterexamples))
            )

    @classmethod
    def conclude(
        cls,
        theorem: str,
        domain: str,
        counterexamples,
        seconds: float,
        details: Optional[Dict[str, Any]] = None,
        partial: bool = False
    ) -> "TheoremReport":
        """Pick the status from the counterexamples: refuted if any, otherwise verified or partially checked."""
        if counterexamples:
            status = Status.REFUTED
        else:
            status = Status.PARTIAL if partial else Status.VERIFIED
        return cls(theorem, status, domain, tuple(counterexamples), seconds, dict(details or {}))

    @property
    def ok(self) -> bool:
        return self.status is not Status.REFUTED

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status.value,
            "domain": self.domain,
            "counterexamples": list(self.counterexamples),
            "seconds": self.seconds,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremReport":
        return cls(
            theorem=data["theorem"],
            status=Status(data["status"]),
            domain=data["domain"],
            counterexamples=tuple(data.get("counterexamples", ())),
            seconds=float(data.get("seconds", 0.0)),
            details=dict(data.get("details", {})),
        )

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "TheoremReport":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class VerifyConfig:
    bound: int = 10_000
    max_tree_order: int = 50
    max_cycle_order: int = 50
    max_grid_side: int = 12
    max_square_grid: int = 12
    max_triangulation_order: int = 30
    lattice_min: int = 7
    lattice_max: int = 9
    lemma2_orders: Tuple[int, ...] = (7, 8)
    small_max_order: int = 6
    enumerated_tree_order: int = 8
    enumeration_max_order: int = 8
    roundtrip_order: int = 7
    relabelings: int = 100
    relabel_sample: int = 1000
    seed: int = 981011
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lemma2_orders", tuple(self.lemma2_orders))
        if self.bound < 18:
            raise ValueError("scan bound must be at least 18, got {}".format(self.bound))
        if self.jobs < 1:
            raise ValueError("jobs must be positive, got {}".format(self.jobs))
        if not 1 <= self.lattice_min <= self.lattice_max:
            raise ValueError("lattice range [{}, {}] is empty".format(self.lattice_min, self.lattice_max))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerifyConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError("unknown configuration keys {}, expected a subset of {}".format(unknown, sorted(known)))
        return cls(**data)

    @classmethod
    def from_json(cls, config_file: Union[str, Path]) -> "VerifyConfig":
        with open(config_file) as json_file:
            return cls.from_dict(json.load(json_file))

    def override(self, **kwargs) -> "VerifyConfig":
        """Copy with the given fields replaced; None values keep the current setting."""
        return dataclasses.replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def to_dict(self) -> dict:
        data = dataclasses.asdict(self)
        data["lemma2_orders"] = list(self.lemma2_orders)
        return data
