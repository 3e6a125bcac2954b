#!/usr/bin/env python3
"""
Utility functions for the Network Dictionary Toolkit
Logging, atomic file output and random stream handling
"""

import os
import sys
import tempfile
from contextlib import contextmanager
from datetime import datetime
from typing import Iterator, Optional, TextIO

import numpy as np
from dotenv import load_dotenv

load_dotenv(os.path.join(os.path.dirname(__file__), '..', '..', 'config', '.env'))

_LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}
_echo_to_stderr = False

# Named random streams; a chain index is appended where several chains run
STREAM_GENERATE = 1
STREAM_CORRUPT = 2
STREAM_LEARN_CHAIN = 3
STREAM_LEARN_INIT = 4
STREAM_RECONSTRUCT = 5
STREAM_SPLIT = 6
STREAM_RANDOM_DICT = 7
STREAM_DIAGNOSTIC = 8
STREAM_BOUND = 9


def set_verbose(enabled: bool) -> None:
    """Echo log lines to stderr as well as to the log files"""
    global _echo_to_stderr
    _echo_to_stderr = enabled


def _log_dir() -> Optional[str]:
    directory = os.getenv("NDL_LOG_DIR", "logs")
    return directory or None


def _write_log(level: str, message: str) -> None:
    threshold = _LEVELS.get(os.getenv("NDL_LOG_LEVEL", "INFO").upper(), 20)
    if _LEVELS[level] < threshold:
        return
    line = f"{datetime.now().isoformat()}: {message}"
    if _echo_to_stderr:
        print(f"[{level}] {line}", file=sys.stderr)
    directory = _log_dir()
    if directory is None:
        return
    try:
        os.makedirs(directory, exist_ok=True)
        with open(os.path.join(directory, f"{level.lower()}.log"), "a") as f:
            f.write(line + "\n")
    except OSError:
        # logging is best effort
        pass


def log_error(message: str) -> None:
    """Log errors to file with timestamp"""
    _write_log("ERROR", message)


def log_warning(message: str) -> None:
    """Log warning messages to file with timestamp"""
    _write_log("WARNING", message)


def log_info(message: str) -> None:
    """Log info messages to file with timestamp"""
    _write_log("INFO", message)


def log_debug(message: str) -> None:
    _write_log("DEBUG", message)


def ensure_directory_exists(path: str) -> None:
    """Ensure directory exists, create if it doesn't"""
    if path:
        os.makedirs(path, exist_ok=True)


@contextmanager
def atomic_write(path: str, mode: str = "w") -> Iterator[TextIO]:
    """Write to a temp file beside `path`, then rename it into place"""
    directory = os.path.dirname(os.path.abspath(path))
    ensure_directory_exists(directory)
    fd, tmp_path = tempfile.mkstemp(prefix=".tmp_", dir=directory)
    try:
        with os.fdopen(fd, mode) as handle:
            yield handle
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def resolve_seed(seed: Optional[int] = None) -> Optional[int]:
    """Explicit seed wins, then NDL_SEED, else None (fresh entropy)"""
    if seed is not None:
        return int(seed)
    env_seed = os.getenv("NDL_SEED")
    if env_seed:
        return int(env_seed)
    return None


def make_rng(seed: Optional[int], *stream: int) -> np.random.Generator:
    """Independent Philox stream for (seed, stream ids)"""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(sequence))
