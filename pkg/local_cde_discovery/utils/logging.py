# Location: local_cde_discovery/utils/logging.py
"""
Logging Utilities

Log setup for the CLI and scripts. Records go to stderr so that stdout
carries only command output.
"""

import logging
import os
import sys
from typing import List, Optional


def setup_logging(
    log_level: Optional[str] = None, log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configure the root logger.

    Args:
        log_level: The logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: The file to write logs to (optional)

    Returns:
        The logger of this module
    """
    if log_level is None:
        log_level = os.environ.get("LOCAL_CDE_LOG_LEVEL", "INFO")

    numeric_level = getattr(logging, log_level.upper(), logging.INFO)

    if log_file is None:
        log_file = os.environ.get("LOCAL_CDE_LOG_FILE") or None

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_dir = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=numeric_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )

    # Set specific logger levels
    logging.getLogger("asyncio").setLevel(logging.WARNING)

    logger = logging.getLogger(__name__)
    logger.debug(f"Logging initialized at level {log_level}")
    if log_file:
        logger.debug(f"Log file: {log_file}")

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: The logger name

    Returns:
        A logger instance
    """
    return logging.getLogger(name)
