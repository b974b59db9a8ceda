"""Matrix grids."""

from rich import box
from rich.table import Table

from src.models import RationalMatrix, format_rational
from src.views.console import render_text


def render_matrix(m: RationalMatrix, title: str | None = None) -> str:
    """Labeled grid followed by the compact literal form.

    Args:
        m: Matrix to show
        title: Optional table title

    Returns:
        Text ending with a line such as ``[[1,1],[1,2]]``
    """
    table = Table(title=title, box=box.SIMPLE, show_edge=False)
    table.add_column("")
    for col in m.col_basis:
        table.add_column(col, justify="right")
    for label, row in zip(m.row_basis, m.entries):
        table.add_row(label, *(format_rational(q) for q in row))
    grid = render_text(table) if m.row_basis and m.col_basis else ""
    return grid + m.compact() + "\n"

