"""
Logging setup - one RichHandler on stderr for the whole process.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

_configured = False


def setup_logging(level: str = "WARNING") -> None:
    """Install the rich handler on the ``grtab`` root logger (idempotent)."""
    global _configured
    root = logging.getLogger("grtab")
    root.setLevel(level)
    if _configured:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Logger under the ``grtab`` namespace, e.g. ``grtab.core.symmetric``."""
    return logging.getLogger(f"grtab.{name}")
