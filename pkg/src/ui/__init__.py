"""UI module: the safec command line and the demo transcripts."""

from src.ui.cli import main

__all__ = [
    "main",
]
