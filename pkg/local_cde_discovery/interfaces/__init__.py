# Location: local_cde_discovery/interfaces/__init__.py
"""Abstract base classes for pluggable components."""
