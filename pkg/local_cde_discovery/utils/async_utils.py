# Location: local_cde_discovery/utils/async_utils.py
"""
Asynchronous Utilities

Runs blocking discovery work from asyncio code.
"""

import asyncio
import logging
from concurrent.futures import Executor
from functools import partial
from typing import Any, Callable, Optional, TypeVar

T = TypeVar("T")
logger = logging.getLogger(__name__)


async def run_sync_in_executor(
    sync_func: Callable[..., T],
    *args: Any,
    executor: Optional[Executor] = None,
    **kwargs: Any,
) -> T:
    """
    Runs a synchronous function in an executor pool
    to avoid blocking the event loop.

    Args:
        sync_func: The synchronous function to execute.
        *args: Positional arguments for the function.
        executor: Pool to run in; None uses the loop's default pool.
        **kwargs: Keyword arguments for the function.

    Returns:
        The result of the synchronous function.

    Raises:
        Exception: Propagates any exception raised by the sync_func.
    """
    loop = asyncio.get_running_loop()
    func_call = partial(sync_func, *args, **kwargs)
    try:
        return await loop.run_in_executor(executor, func_call)
    except Exception as e:
        logger.error(f"Executor job {sync_func.__name__} failed: {e}")
        raise
