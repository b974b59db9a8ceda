"""Component, orientation and validation listings."""

from fractions import Fraction

from rich import box
from rich.table import Table

from src.models import Component, Sign, ValidationReport, format_rational
from src.views.console import render_text


def render_components(components: list[Component], cardinality: Fraction | None = None) -> str:
    """Table of π₀ with |Aut| and orientability, plus the cardinality line."""
    table = Table(box=box.SIMPLE, show_edge=False)
    table.add_column("representative")
    table.add_column("objects", justify="right")
    table.add_column("|Aut|", justify="right")
    table.add_column("orientable")
    for comp in components:
        table.add_row(
            comp.representative,
            str(len(comp.members)),
            str(comp.aut_order),
            "✓" if comp.orientable else "✗",
        )
    text = render_text(table)
    if cardinality is not None:
        text += f"cardinality {format_rational(cardinality)}\n"
    return text


def render_orientations(result: tuple[int, dict[str, Sign]] | None) -> str:
    """Orientation count and witness, or the non-orientable notice."""
    if result is None:
        return "✗ not orientable (odd automorphism)\n"
    count, omega = result
    lines = [f"orientations {count}"]
    lines.extend(f"{x}\t{omega[x].symbol}" for x in sorted(omega))
    return "\n".join(lines) + "\n"


def render_validation(reports: list[ValidationReport]) -> str:
    return "".join(f"{r}\n" for r in reports)
