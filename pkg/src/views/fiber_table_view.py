"""Fiber tables of exterior power spans and scalar listings."""

from fractions import Fraction

from rich import box
from rich.table import Table

from src.models import FiberTableReport, SignedGroupoid, format_rational
from src.views.console import render_text


def _label(parts: tuple[str, ...]) -> str:
    return "".join(parts) if all(len(p) == 1 for p in parts) else "·".join(parts)


def render_fiber_table(report: FiberTableReport, listing: bool = False) -> str:
    """Grid of fiber cells; immaterial cells are marked with ``~``.

    Args:
        report: Fiber table
        listing: Return the machine-readable TSV listing instead
    """
    if listing:
        return report.to_tsv()
    table = Table(
        title=f"two-sided fibers of Λ^{report.k}",
        box=box.SQUARE,
        show_lines=True,
        caption="~ immaterial (not orientable on both sides)",
    )
    table.add_column("")
    for col in report.cols:
        table.add_column(_label(report.cells[(report.rows[0], col)].col_tuple))
    for row in report.rows:
        cells = [report.cells[(row, col)] for col in report.cols]
        rendered = []
        for cell in cells:
            body = "\n".join(str(el) for el in cell.elements) or "∅"
            mark = "" if cell.material else "~ "
            rendered.append(f"{body}\n{mark}net {format_rational(cell.net)}")
        table.add_row(_label(cells[0].row_tuple) if cells else row, *rendered)
    return render_text(table)


def render_scalar(sc: SignedGroupoid, cardinality: Fraction | None = None) -> str:
    """Component listing of a scalar: sign, |Aut| and size."""
    table = Table(box=box.SIMPLE, show_edge=False)
    table.add_column("component")
    table.add_column("sign")
    table.add_column("|Aut|", justify="right")
    table.add_column("objects", justify="right")
    for members in sc.components:
        rep = members[0]
        table.add_row(
            rep,
            sc.signs[rep].symbol,
            str(len(sc.underlying.automorphisms(rep))),
            str(len(members)),
        )
    text = render_text(table)
    if cardinality is not None:
        text += f"cardinality {format_rational(cardinality)}\n"
    return text
