"""Logging setup: rich handler on stderr, optional plain file handler."""

import logging

from rich.console import Console
from rich.logging import RichHandler

from src.config.settings import settings


def configure_logging(level: str | None = None, log_file: str | None = None) -> None:
    """Install handlers on the root logger.

    stdout is left untouched so command output stays deterministic.

    Args:
        level: Level name (defaults to LOG_LEVEL)
        log_file: Extra log file (defaults to LOG_FILE, unset means none)
    """
    level = (level or settings.LOG_LEVEL).upper()
    handlers: list[logging.Handler] = [
        RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    ]
    log_file = log_file or settings.LOG_FILE
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        handlers.append(file_handler)
    logging.basicConfig(level=level, format="%(message)s", handlers=handlers, force=True)
