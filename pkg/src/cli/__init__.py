"""
Command-line interface and the bundled example suite
"""

from .main import build_parser, main
from .report import EXIT_CODES, Finding, RunReport

__all__ = ["EXIT_CODES", "Finding", "RunReport", "build_parser", "main"]
