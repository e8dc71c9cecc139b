from pathlib import Path
from typing import Optional, Union

from jinja2 import Environment, FileSystemLoader

from ..models.report import SuiteReport

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"


def format_computed(value: Union[float, list[float]]) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(f"{v:.10g}" for v in value) + "]"
    return f"{value:.10g}"


templates = Environment(loader=FileSystemLoader(TEMPLATES_DIR), keep_trailing_newline=True)
templates.filters["format_computed"] = format_computed


def render_table(report: SuiteReport, seconds: Optional[float] = None) -> str:
    """Human-readable table; ``seconds`` overrides the summary time, which JSON may leave null."""
    seconds = seconds if seconds is not None else report.summary.seconds
    return templates.get_template("report.txt.j2").render(
        checks=report.checks, summary=report.summary, config=report.config, seconds=seconds
    )
