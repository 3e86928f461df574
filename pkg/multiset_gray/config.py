#!/usr/bin/env python3
"""
Configuration for multiset_gray
Module-level constants, overridable from the environment or a .env file
"""

import logging
import os
import sys
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        logging.getLogger(__name__).warning(f"Ignoring non-integer {name}={raw!r}")
        return default


# Configuration
DEFAULT_CAP = _env_int("MULTISET_GRAY_CAP", 10 ** 7)  # largest list we materialize
SJT_MAX_N = _env_int("MULTISET_GRAY_SJT_MAX_N", 10)
HAMILTON_MAX_VERTICES = _env_int("MULTISET_GRAY_HAMILTON_MAX_VERTICES", 10 ** 4)

LOG_LEVEL = os.getenv("MULTISET_GRAY_LOG_LEVEL", "WARNING")
WEB_LOG_LEVEL = os.getenv("MULTISET_GRAY_LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("MULTISET_GRAY_LOG_FILE")  # None: stderr only
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

DB_PATH = os.getenv(
    "MULTISET_GRAY_DB_PATH",
    os.path.join(os.path.expanduser("~/.multiset_gray"), "experiments.db"),
)

WEB_HOST = os.getenv("MULTISET_GRAY_WEB_HOST", "127.0.0.1")
WEB_PORT = _env_int("MULTISET_GRAY_WEB_PORT", 5000)
WEB_MAX_ROWS = _env_int("MULTISET_GRAY_WEB_MAX_ROWS", 10 ** 4)

SLOW_TESTS = os.getenv("MULTISET_GRAY_SLOW_TESTS", "") not in ("", "0")


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = LOG_FILE):
    """
    Configure root logging for an entry point.

    Logs go to stderr so that stdout stays free for permutation streams,
    CSV and DOT output.

    Args:
        level: Level name (default: MULTISET_GRAY_LOG_LEVEL)
        log_file: Optional file that receives a copy of every record
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
