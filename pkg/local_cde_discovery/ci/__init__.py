# Location: local_cde_discovery/ci/__init__.py
"""
CI Engine

Conditional-independence backends (d-separation oracle, Fisher-z, G-square),
the counting and deduplicating wrapper, datasets and the separating-set cache.
"""
