"""
Report Rendering - flagtwist

JSON (canonical, plus the envelope), an aligned rich table for people, and
CSV with one row per trial for downstream analysis.
"""

import csv
import io
import logging
from pathlib import Path
from typing import List, Union

from rich.console import Console
from rich.table import Table

from src.errors import BadParams
from src.harness import Report

logger = logging.getLogger(__name__)

FORMATS = ("json", "text", "csv")

_OUTCOME_STYLE = {"pass": "green", "fail": "bold red", "hypothesis-not-met": "yellow"}


def render_json(report: Report) -> str:
    return report.full_json()


def report_table(report: Report) -> Table:
    """One row per trial with its outcome and the quantities under test."""
    columns = _quantity_columns(report)
    table = Table(title=f"{report.scenario}: {report.claim}", show_header=True, header_style="bold")
    table.add_column("Trial", justify="right")
    table.add_column("Outcome")
    table.add_column("Retries", justify="right")
    for name in columns:
        table.add_column(name, justify="right")
    for trial in report.trials:
        table.add_row(
            str(trial.index),
            f"[{_OUTCOME_STYLE[trial.outcome]}]{trial.outcome}[/]",
            str(trial.retries),
            *(str(trial.quantities.get(name, "")) for name in columns),
        )
    return table


def render_text(report: Report, width: int = 160) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=width, color_system=None)
    params = report.params
    console.print(f"scenario {report.scenario}  d={params.d} n={params.n} "
                  f"trials={params.trials} seed={report.seed}")
    console.print(report_table(report))
    verdict = report.verdict
    console.print(f"verdict: {verdict.status} ({verdict.passed} pass, {verdict.failed} fail, "
                  f"{verdict.hypothesis_not_met} hypothesis not met)")
    for trial in report.trials:
        for check in trial.checks:
            if not check.holds:
                console.print(f"trial {trial.index}: expected {check.expectation} "
                              f"(expected {check.expected}, got {check.actual})")
    for note in report.notes:
        console.print(f"note: {note}")
    return buffer.getvalue()


def render_csv(report: Report) -> str:
    """Columns: index, seed, retries, outcome, then quantities in sorted order."""
    columns = sorted(_quantity_columns(report))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["index", "seed", "retries", "outcome", *columns])
    for trial in report.trials:
        writer.writerow([trial.index, trial.seed, trial.retries, trial.outcome,
                         *(trial.quantities.get(name, "") for name in columns)])
    return buffer.getvalue()


def render(report: Report, fmt: str) -> str:
    """
    Raises:
        BadParams: If fmt is not json, text or csv
    """
    renderers = {"json": render_json, "text": render_text, "csv": render_csv}
    if fmt not in renderers:
        raise BadParams(f"Unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return renderers[fmt](report)


def write_report(report: Report, path: Union[str, Path], fmt: str = "json") -> Path:
    path = Path(path)
    path.write_text(render(report, fmt), encoding="utf-8")
    logger.info("wrote %s report for %s to %s", fmt, report.scenario, path)
    return path


def _quantity_columns(report: Report) -> List[str]:
    seen: List[str] = []
    for trial in report.trials:
        for name in trial.quantities:
            if name not in seen:
                seen.append(name)
    return seen
