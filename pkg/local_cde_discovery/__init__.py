# Location: local_cde_discovery/__init__.py
"""
Local CDE Discovery - Main Package

This package implements PC-style local causal discovery around a target
variable: local essential graphs built from data or from a d-separation
oracle, and the LocPC-CDE procedure deciding whether the controlled direct
effect of a treatment on the target is identifiable.

Key Sub-packages:
- core: Configuration and exceptions.
- interfaces: Abstract base classes for conditional-independence sources.
- graphs: DAGs, local essential graphs, d-separation, CPDAGs, Meek rules.
- local: Structural theory (adjacency traces, spurious neighbors, DIPs, NOC).
- ci: Oracle, Fisher-z and G-square tests, counting wrapper, sepset cache.
- discovery: LocPC, LocPC-CDE, PC baseline and the CI-test bound.
- datagen: Random DAGs, benchmark instances and SCM simulation.
- bench: Benchmark harness, metrics and summaries.
- utils: Logging, asyncio helpers and subset enumeration.

See README.md for setup and usage instructions.
"""

import logging

__version__ = "0.1.0"  # Keep aligned with pyproject.toml

__license__ = "MIT"

APP_NAME = "Local CDE Discovery"

try:
    VERSION_INFO = tuple(map(int, __version__.split(".")))
except ValueError:
    VERSION_INFO = (0, 0, 0)

_log = logging.getLogger(__name__)
if not logging.getLogger("local_cde_discovery").hasHandlers():
    logging.getLogger("local_cde_discovery").addHandler(logging.NullHandler())

__all__ = [
    "__version__",
    "APP_NAME",
    "VERSION_INFO",
]
