# Location: local_cde_discovery/bench/__init__.py
"""
Benchmark

Synthetic sweeps comparing LocPC-CDE with global PC, their metrics and
summary tables.
"""
