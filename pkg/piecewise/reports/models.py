"""Report models emitted by every CLI command."""

from __future__ import annotations

import hashlib
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


def compute_content_hash(content: Any) -> str:
    """Deterministic SHA-256 of the canonical JSON form."""
    canonical = json.dumps(content, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=str)
    return f"sha256:{hashlib.sha256(canonical.encode('utf-8')).hexdigest()}"


class Verdict(BaseModel):
    """One certified property; `anchor` names the property, `witness` explains a failure."""

    anchor: str
    passed: bool
    detail: str = ""
    witness: Optional[Any] = None


class Report(BaseModel):
    command: str
    field: str
    inputs_digest: str
    verdicts: List[Verdict] = Field(default_factory=list)
    results: Dict[str, Any] = Field(default_factory=dict)
    timing_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add(self, anchor: str, passed: bool, detail: str = "", witness: Any = None) -> Verdict:
        verdict = Verdict(anchor=anchor, passed=bool(passed), detail=detail, witness=witness)
        self.verdicts.append(verdict)
        return verdict

    def failures(self) -> List[Verdict]:
        return [verdict for verdict in self.verdicts if not verdict.passed]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False, default=str)

    def summary(self) -> str:
        """One line per verdict for stderr."""
        lines = [f"{self.command} [{self.field}]: {'PASS' if self.passed else 'FAIL'}"]
        for verdict in self.verdicts:
            mark = "ok  " if verdict.passed else "FAIL"
            tail = f" ({verdict.detail})" if verdict.detail else ""
            lines.append(f"  {mark} {verdict.anchor}{tail}")
        return "\n".join(lines)
