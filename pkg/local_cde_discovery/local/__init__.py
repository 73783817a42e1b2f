# Location: local_cde_discovery/local/__init__.py
"""
Local Structure

Adjacency traces, spurious and descendant inducing neighbors, the oracle LEG
construction and the non-orientability criterion.
"""
