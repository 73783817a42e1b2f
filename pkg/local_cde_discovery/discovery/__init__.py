# Location: local_cde_discovery/discovery/__init__.py
"""
Discovery

LocPC, LocPC-CDE, background knowledge, the global PC baseline and the
CI-test bound.
"""
