"""
Scripts Module

Contains command-line scripts for reproducing experiments with the Local CDE
Discovery package.

These scripts are typically run from the command line in the project root.
"""
