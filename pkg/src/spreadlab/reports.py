"""Machine- and human-readable suite reports (schema ``report_v1``).

A suite run produces one :class:`SuiteReport`: the claim it verifies, the
pass/fail verdict with the worst deviation seen, counts, witnesses, and the
seed that reproduces it.  JSON output is key-sorted so identical runs are
byte-identical except for the wall-time field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

SCHEMA = "report_v1"


def jsonable(value: Any) -> Any:
    """Recursively convert report payloads to plain JSON types; complex
    numbers become [real, imag] pairs."""
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float, str)):
        return value
    return str(value)


@dataclass
class SuiteReport:
    model: str
    suite: str
    claim: str
    passed: bool
    seed: int
    samples: int = 0
    skipped: int = 0
    max_deviation: float = 0.0
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_dict(self, include_wall_time: bool = True) -> dict:
        data = {
            "schema": SCHEMA,
            "model": self.model,
            "suite": self.suite,
            "claim": self.claim,
            "passed": bool(self.passed),
            "seed": int(self.seed),
            "samples": int(self.samples),
            "skipped": int(self.skipped),
            "max_deviation": float(self.max_deviation),
            "witnesses": jsonable(self.witnesses),
            "details": jsonable(self.details),
        }
        if include_wall_time:
            data["wall_time_s"] = self.wall_time_s
        return data

    def to_json(self, include_wall_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_wall_time), sort_keys=True, indent=2)

    def to_text(self) -> str:
        rows = [
            ("suite", f"{self.model}/{self.suite}"),
            ("claim", self.claim),
            ("verdict", "pass" if self.passed else "FAIL"),
            ("samples", str(self.samples)),
            ("skipped", str(self.skipped)),
            ("max deviation", f"{self.max_deviation:.3e}"),
            ("seed", str(self.seed)),
            ("wall time", f"{self.wall_time_s:.2f} s"),
        ]
        for key, value in sorted(self.details.items()):
            rows.append((key, str(jsonable(value))))
        width = max(len(k) for k, _ in rows)
        lines = [f"{k:<{width}}  {v}" for k, v in rows]
        for w in self.witnesses[:5]:
            lines.append(f"  witness: {jsonable(w)}")
        return "\n".join(lines)

    def csv_row(self) -> str:
        return ",".join(
            str(v)
            for v in (
                self.model,
                self.suite,
                "pass" if self.passed else "fail",
                self.samples,
                self.skipped,
                f"{self.max_deviation:.16g}",
                self.seed,
                f"{self.wall_time_s:.3f}",
            )
        )


CSV_HEADER = "model,suite,verdict,samples,skipped,max_deviation,seed,wall_time_s"
