"""
Run reports: verdicts, witnesses and tables for one command
"""

from typing import Any, Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, Field

from ..utils.formatters import create_summary_table, findings_table, format_value, render_table

EXIT_CODES = {"pass": 0, "fail": 1, "error": 2}


class Finding(BaseModel):
    """One checked condition; ``witness`` holds the clashing data of a failure"""

    check: str
    ok: bool
    where: Optional[str] = None
    detail: str = ""
    witness: Dict[str, str] = Field(default_factory=dict)


class RunReport(BaseModel):
    command: str
    argv: List[str] = Field(default_factory=list)
    verdict: Literal["pass", "fail", "error"] = "pass"
    findings: List[Finding] = Field(default_factory=list)
    summary: Dict[str, str] = Field(default_factory=dict)
    tables: Dict[str, List[Dict[str, str]]] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    timing_ms: Optional[int] = None

    def add(self, check: str, ok: bool, where: Any = None, detail: str = "", **witness: Any) -> Finding:
        finding = Finding(
            check=check,
            ok=ok,
            where=None if where is None else str(where),
            detail=detail,
            witness={key: format_value(value) for key, value in witness.items()},
        )
        self.findings.append(finding)
        return finding

    def set(self, **values: Any) -> None:
        for key, value in values.items():
            self.summary[key] = format_value(value)

    def table(self, name: str, frame: pd.DataFrame) -> None:
        self.tables[name] = [{str(k): format_value(v) for k, v in row.items()}
                             for row in frame.to_dict(orient="records")]

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def error(self, exc: Exception) -> None:
        """A usage or input problem; the command produced no verdict"""
        self.add("input", False, detail=str(exc), error=type(exc).__name__)
        self.verdict = "error"

    def finalize(self) -> "RunReport":
        if self.verdict != "error":
            self.verdict = "fail" if any(not f.ok for f in self.findings) else "pass"
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    @property
    def failures(self) -> List[Finding]:
        return [f for f in self.findings if not f.ok]

    def render_text(self) -> str:
        """Human-readable rendering; verdicts match the JSON form"""
        lines = [f"{self.command}: {self.verdict.upper()}"]
        if self.summary:
            lines += ["", render_table(create_summary_table(self.summary, "Quantity"))]
        for name, rows in self.tables.items():
            lines += ["", f"[{name}]", render_table(pd.DataFrame(rows))]
        if self.findings:
            lines += ["", "[findings]", render_table(findings_table(self.findings))]
            for finding in self.failures:
                if finding.witness:
                    witness = ", ".join(f"{k} = {v}" for k, v in finding.witness.items())
                    lines.append(f"  witness for {finding.check} at {finding.where or '-'}: {witness}")
        for text in self.notes:
            lines.append(f"note: {text}")
        if self.timing_ms is not None:
            lines.append(f"time: {self.timing_ms} ms")
        return "\n".join(lines)
