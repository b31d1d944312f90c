"""
The ``eulersense`` command: construct, matrix, analyze, recover, selftest.
"""

from eulersense.cli.config import ExitCode, RunConfig
from eulersense.cli.main import build_parser, main

__all__ = ["ExitCode", "RunConfig", "build_parser", "main"]
