__all__ = ['initialize', 'log_config']

from cylnet.schedule.components import THREADS_VARIABLE
from contextlib import contextmanager
from importlib.metadata import (PackageNotFoundError, version)
from typing import Iterator

import cylnet
import logging
import os

# Starting logger
logger = logging.getLogger(__name__)


def log_config(config) -> logging.Handler:
    """
    Send the log to ``config.log_file`` when requested and print the
    initial configuration. Returns the installed handler, if any.
    """
    if config.log_file is None:
        return None

    handler = logging.FileHandler(config.log_file, mode='w')
    handler.setFormatter(logging.Formatter(
        '%(asctime)s---%(levelname)s\n%(message)s\n', datefmt='[%I:%M:%S]'))
    root = logging.getLogger()
    root.addHandler(handler)
    root.setLevel(logging.DEBUG)
    logging.getLogger("noodles").setLevel(logging.WARNING)

    try:
        package_version = version('cylnet')
    except PackageNotFoundError:
        package_version = "unknown"
    workdir = os.path.abspath('.')

    logger.info(f"Using cylnet version: {package_version} ")
    logger.info(f"cylnet path is: {cylnet.__path__}")
    logger.info(f"Working directory is: {workdir}")
    logger.info(f"Running workflow: {config.workflow}")
    return handler


@contextmanager
def initialize(config) -> Iterator:
    """
    Logging and thread settings for the duration of a workflow; both are
    restored afterwards.
    """
    root = logging.getLogger()
    level = root.level
    previous = os.environ.get(THREADS_VARIABLE)
    handler = log_config(config)
    if config.threads is not None:
        os.environ[THREADS_VARIABLE] = str(config.threads)
    try:
        yield config
    finally:
        if handler is not None:
            root.removeHandler(handler)
            handler.close()
            root.setLevel(level)
        if config.threads is not None:
            if previous is None:
                del os.environ[THREADS_VARIABLE]
            else:
                os.environ[THREADS_VARIABLE] = previous
