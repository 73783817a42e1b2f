# Location: local_cde_discovery/core/__init__.py
"""Core configuration and exception types."""
