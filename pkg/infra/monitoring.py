from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

from core.config import get_settings

try:  # Optional Sentry support
    import sentry_sdk
except ImportError:  # pragma: no cover
    sentry_sdk = None

logger = logging.getLogger(__name__)

REGISTRY = CollectorRegistry()

CHECK_LATENCY = Histogram(
    "qcreg_check_latency_seconds",
    "Wall time of a single pipeline check",
    labelnames=("check",),
    buckets=(0.01, 0.1, 0.5, 1.0, 5.0, 30.0),
    registry=REGISTRY,
)
CHECK_COUNT = Counter(
    "qcreg_check_total",
    "Pipeline checks executed, by outcome",
    labelnames=("check", "outcome"),
    registry=REGISTRY,
)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    settings = get_settings()
    logging.basicConfig(level=(level or settings.log_level).upper(), format=LOG_FORMAT)


def init_error_reporting() -> bool:
    settings = get_settings()
    if settings.sentry_dsn and sentry_sdk is not None:
        sentry_sdk.init(dsn=settings.sentry_dsn, traces_sample_rate=0.0)
        return True
    return False


@contextmanager
def track_check(name: str) -> Iterator[None]:
    """Time a check into the latency histogram."""
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start
        if get_settings().metrics_enabled:
            CHECK_LATENCY.labels(name).observe(elapsed)
        logger.debug("check %s finished in %.3fs", name, elapsed)


def record_outcome(name: str, outcome: str) -> None:
    if get_settings().metrics_enabled:
        CHECK_COUNT.labels(name, outcome).inc()


def write_metrics(path: str) -> None:
    if not get_settings().metrics_enabled:
        raise RuntimeError("Prometheus metrics disabled")
    write_to_textfile(path, REGISTRY)
