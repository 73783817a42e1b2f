# Location: local_cde_discovery/datagen/__init__.py
"""
Data Generation

Random DAGs conditioned on controlled-direct-effect identifiability and
structural causal model simulation.
"""
