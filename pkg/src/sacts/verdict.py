"""Three-valued verdicts with JSON-ready witnesses and certificates."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    property: str
    status: Status
    witness: Any = None
    certificate: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def __bool__(self):
        raise TypeError("Verdict is three-valued; test .holds or .status")

    def to_dict(self) -> dict:
        return {"property": self.property, "status": self.status.value,
                "witness": self.witness, "certificate": self.certificate}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)


def holds(prop, certificate=None, witness=None) -> Verdict:
    return Verdict(prop, Status.HOLDS, witness, certificate or {})


def fails(prop, witness, certificate=None) -> Verdict:
    return Verdict(prop, Status.FAILS, witness, certificate or {})


def unknown(prop, certificate=None, witness=None) -> Verdict:
    return Verdict(prop, Status.UNKNOWN, witness, certificate or {})
