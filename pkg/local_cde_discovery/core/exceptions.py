# Location: local_cde_discovery/core/exceptions.py
"""
Custom Exception Classes

This module defines custom exceptions used throughout the package.
"""


class LocalCdeError(Exception):
    """Base exception class for all local CDE discovery errors."""

    pass


class GraphError(LocalCdeError):
    """Raised when a graph is malformed (self-loop, duplicate edge, bad index)."""

    pass


class CyclicGraphError(GraphError):
    """Raised when a DAG edge set contains a directed cycle."""

    pass


class OrientationConflictError(GraphError):
    """Raised when edge marks cannot be reconciled into a valid LEG."""

    pass


class GraphFormatError(GraphError):
    """Raised when a DAG or LEG text file cannot be parsed."""

    pass


class WitnessError(GraphError):
    """Raised when a descendant inducing path witness is malformed."""

    pass


class CiTestError(LocalCdeError):
    """Raised when a conditional-independence query is invalid."""

    pass


class InsufficientSamplesError(CiTestError):
    """Raised when a test has too few samples for its conditioning set."""

    pass


class DatasetError(LocalCdeError):
    """Raised when a dataset is malformed or has the wrong value domain."""

    pass


class BackgroundKnowledgeError(LocalCdeError):
    """Raised when background knowledge is malformed."""

    pass


class RetryExhaustedError(LocalCdeError):
    """Raised when a rejection sampler exceeds its draw cap."""

    pass


class MetricError(LocalCdeError):
    """Raised when a metric is undefined for its inputs."""

    pass


class ConfigurationError(LocalCdeError):
    """Raised when there's an issue with configuration."""

    pass
