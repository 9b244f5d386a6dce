"""Command-line front end."""

from digit_dirichlet.cli.main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
