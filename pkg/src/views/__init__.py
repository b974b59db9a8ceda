"""Plain-text views for objlin."""

from src.views.console import render_text
from src.views.matrix_view import render_matrix
from src.views.component_view import render_components, render_orientations, render_validation
from src.views.fiber_table_view import render_fiber_table, render_scalar

__all__ = [
    "render_text",
    "render_matrix",
    "render_components",
    "render_orientations",
    "render_validation",
    "render_fiber_table",
    "render_scalar",
]
