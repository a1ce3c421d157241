import json
import logging
from typing import Any, Dict, List, Optional

from geometry.report import TOOL_VERSION, VerificationReport, to_jsonable

logger = logging.getLogger(__name__)

FORMATS = ("md", "json", "dot")


def _cell(value: Any) -> str:
    text = json.dumps(to_jsonable(value)) if isinstance(value, (list, tuple, dict)) else str(to_jsonable(value))
    return text.replace("|", "\\|")


def report_to_markdown(report: VerificationReport, seedless: bool = False) -> str:
    lines = [f"# {report.construction}: {report.verdict}", ""]
    lines.append(f"tool version {TOOL_VERSION}; inputs: "
                 + ", ".join(f"{k} = {_cell(v)}" for k, v in report.inputs.items()))
    lines += ["", "| fact | value | expected | pass | anchor |", "|---|---|---|---|---|"]
    for fact in report.facts:
        expected = "" if fact.expected is None else _cell(fact.expected)
        mark = "yes" if fact.passed else "NO"
        lines.append(f"| {fact.name} | {_cell(fact.value)} | {expected} | {mark} | {_cell(fact.anchor)} |")
    if report.certificates:
        lines += ["", "## Certificates", ""]
        lines += [f"- [{c.rule}] {c.anchor}: {c.detail}" for c in report.certificates]
    if report.notes:
        lines += ["", "## Notes", ""]
        lines += [f"- {note}" for note in report.notes]
    for name, artifact in report.artifacts.items():
        lines += ["", f"## {name}", "", "```", artifact.rstrip("\n"), "```"]
    if not seedless and report.timing is not None:
        lines += ["", f"time: {report.timing:.3f} s"]
    return "\n".join(lines) + "\n"


def sweep_to_markdown(rows: List[Dict[str, Any]], notes: List[str] = ()) -> str:
    lines = ["| construction | p | dim X | chi | h1 bound | pass |", "|---|---|---|---|---|---|"]
    for r in rows:
        mark = "yes" if r["passed"] else "NO"
        lines.append(f"| {r['construction']} | {r['p']} | {_cell(r['dim_x'])} | {_cell(r['chi'])} "
                     f"| {_cell(r['h1_lower'])} | {mark} |")
    for r in rows:
        if r.get("error"):
            lines.append(f"\n{r['construction']} at p = {r['p']}: {r['error']}")
    for note in notes:
        lines.append(f"\n{note}")
    return "\n".join(lines) + "\n"


class ReportExporter:
    def __init__(self, fmt: str = "md", seedless: bool = False):
        if fmt not in FORMATS:
            raise ValueError(f"Unknown format '{fmt}' (choose from {', '.join(FORMATS)})")
        self.fmt = fmt
        self.seedless = seedless

    def render(self, report: VerificationReport) -> str:
        if self.fmt == "json":
            return report.to_json(seedless=self.seedless) + "\n"
        if self.fmt == "dot":
            if "dual_graph" not in report.artifacts:
                raise ValueError(f"{report.construction} has no dual graph to emit")
            return report.artifacts["dual_graph"]
        return report_to_markdown(report, seedless=self.seedless)

    def render_sweep(self, rows: List[Dict[str, Any]], notes: List[str] = ()) -> str:
        if self.fmt == "json":
            return json.dumps({"rows": to_jsonable(rows), "notes": list(notes)}, indent=2) + "\n"
        if self.fmt == "dot":
            raise ValueError("A sweep table has no DOT form")
        return sweep_to_markdown(rows, notes)

    @staticmethod
    def write(text: str, out: Optional[str] = None):
        if out:
            with open(out, "w") as f:
                f.write(text)
            logger.info(f"Wrote {out}")
        else:
            print(text, end="")
