import logging
import logging.handlers
import time
from contextlib import contextmanager
from typing import Iterable, Iterator, List

import config


def setup_logging(level=None):
    """Setup logging configuration"""
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    log_file = config.LOGGING_CONFIG["file"]
    try:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=config.LOGGING_CONFIG["max_file_size_mb"] * 1024 * 1024,
            backupCount=config.LOGGING_CONFIG["backup_count"],
        ))
    except OSError as e:
        logging.warning(f"Could not open log file {log_file}: {e}")

    logging.basicConfig(
        level=level or config.LOGGING_CONFIG["level"],
        format=config.LOGGING_CONFIG["format"],
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def format_duration(seconds):
    """Format duration in seconds to human readable format"""
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    elif seconds < 60:
        return f"{seconds:.1f}s"
    else:
        minutes = seconds / 60
        return f"{minutes:.1f}m"


@contextmanager
def log_timing(logger: logging.Logger, label: str):
    """Log the wall time of a block at DEBUG level"""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.debug(f"{label} took {format_duration(time.perf_counter() - start)}")


def format_generators(n: int, members: Iterable[int]) -> str:
    """Render a connection set in ± shorthand, e.g. '±1,±3,4' for n=8"""
    members = sorted(set(members))
    parts = []
    for a in members:
        if 2 * a == n:
            parts.append(str(a))
        elif a < n - a:
            parts.append(f"±{a}" if (n - a) in members else str(a))
        elif (n - a) not in members:
            parts.append(str(a))
    return ",".join(parts)
