"""Deterministic rich console capture."""

import io

from rich.console import Console, RenderableType

from src.config.settings import settings


def render_text(*renderables: RenderableType, width: int | None = None) -> str:
    """Render to plain text: no colour, no terminal detection, fixed width."""
    buffer = io.StringIO()
    console = Console(
        file=buffer,
        width=width or settings.OUTPUT_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        markup=False,
        emoji=False,
    )
    for renderable in renderables:
        console.print(renderable)
    return buffer.getvalue()
