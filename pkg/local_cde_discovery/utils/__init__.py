# Location: local_cde_discovery/utils/__init__.py
"""Shared utilities: logging, asyncio helpers, subset enumeration."""
