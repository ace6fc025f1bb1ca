"""Structured outcome records for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TruncationPlan:
    """Enumeration bounds together with the argument that they certify every
    compared coefficient."""

    x_degree: Optional[int] = None
    q_min: Optional[int] = None
    q_max: Optional[int] = None
    max_weights: Optional[dict] = None
    note: str = ""

    def to_json(self) -> dict:
        out = {}
        if self.x_degree is not None:
            out["x_degree"] = self.x_degree
        if self.q_min is not None:
            out["q_min"] = self.q_min
        if self.q_max is not None:
            out["q_max"] = self.q_max
        if self.max_weights:
            out["max_weights"] = dict(self.max_weights)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerifyReport:
    identity_id: str
    params: dict
    status: str
    checked_bounds: dict
    first_mismatch: Optional[dict]
    runtime_ms: int
    seed: int

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": _jsonable(self.params),
            "status": self.status,
            "checked_bounds": _jsonable(self.checked_bounds),
            "first_mismatch": _jsonable(self.first_mismatch),
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        }

    def to_json(self, include_runtime: bool = True) -> str:
        obj = self.to_json_dict()
        if not include_runtime:
            obj.pop("runtime_ms")
        return json.dumps(obj, sort_keys=True)

    def summary_line(self) -> str:
        extra = ""
        if self.first_mismatch is not None:
            extra = f" first_mismatch={json.dumps(_jsonable(self.first_mismatch), sort_keys=True)}"
        params = " ".join(f"{k}={_param_str(v)}" for k, v in sorted(self.params.items()))
        return (
            f"{self.status.upper():12s} {self.identity_id:16s} "
            f"[{params}] {self.runtime_ms} ms seed={self.seed}{extra}"
        )


def _param_str(v):
    from .partitions import Partition, StripMask

    if isinstance(v, Partition):
        return v.to_string()
    if isinstance(v, StripMask):
        return "".join(str(b) for b in v)
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _jsonable(obj):
    from fractions import Fraction

    from .laurent import LaurentQ
    from .partitions import Partition, StripMask

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LaurentQ):
        return obj.to_json()
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, StripMask):
        return "".join(str(b) for b in obj)
    if isinstance(obj, TruncationPlan):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return repr(obj)
