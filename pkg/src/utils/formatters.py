"""
Tabular output for command reports
"""

from typing import Any, Dict, Iterable, List, Mapping, Optional

import pandas as pd


def format_value(value: Any) -> str:
    """Exact text for report cells; lists and booleans get compact forms"""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return ", ".join(str(item) for item in items) or "-"
    return str(value)


def create_summary_table(data: Dict[str, Any], title: str = "Summary") -> pd.DataFrame:
    """
    Create a two-column summary table

    Args:
        data: Parameter names and values, in display order
        title: Column header for the parameter names

    Returns:
        DataFrame with one row per entry
    """
    rows = [{title: key.replace("_", " "), "Value": format_value(value)} for key, value in data.items()]
    return pd.DataFrame(rows, columns=[title, "Value"])


def leader_table(rows: Iterable[Mapping[str, Any]], names: Optional[Mapping[Any, str]] = None) -> pd.DataFrame:
    """
    One row per kernel entry with its leader kind

    Args:
        rows: ``LeaderReport.rows()`` output
        names: Optional map from index text to symbol, for a ``symbol`` column
    """
    records: List[Dict[str, str]] = []
    for row in rows:
        record = {"index": str(row["index"])}
        if names is not None:
            record["symbol"] = names.get(row["index"], "")
        record["kind"] = str(row.get("label", row["kind"]))
        record["minimal"] = format_value(row.get("minimal", False))
        records.append(record)
    columns = ["index"] + (["symbol"] if names is not None else []) + ["kind", "minimal"]
    return pd.DataFrame(records, columns=columns)


def findings_table(findings: Iterable[Any]) -> pd.DataFrame:
    """Findings (anything with ``check``, ``ok``, ``where`` and ``detail``) as a table"""
    records = [{"check": f.check, "ok": format_value(f.ok), "where": f.where or "-", "detail": f.detail}
               for f in findings]
    return pd.DataFrame(records, columns=["check", "ok", "where", "detail"])


def render_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(none)"
    return frame.to_string(index=False)
