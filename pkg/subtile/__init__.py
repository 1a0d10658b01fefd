"""
Subtile package
===============

Substitution tiling systems with exact arithmetic: supertile generation, the tiling
metric, patch statistics, recognizability, period bounds, local admissibility and
relative orientation groups.

Built-in systems are the Penrose triangles, the pinwheel family, the Fibonacci
intervals and a periodic square grid; any other system can be read from a JSON file.
"""
from . import analysis, core, exact, groups, io, metric, systems, threads
from ._cli import cli
from ._config import config
from ._testit import test

__version__ = "0.1.0"


__all__ = [
    "__version__",
    "analysis",
    "cli",
    "config",
    "core",
    "exact",
    "groups",
    "io",
    "metric",
    "systems",
    "test",
    "threads",
]
