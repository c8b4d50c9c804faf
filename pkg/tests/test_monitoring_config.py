import pytest

from core.config import get_settings
from infra.monitoring import (
    REGISTRY,
    init_error_reporting,
    record_outcome,
    track_check,
    write_metrics,
)


def test_settings_read_prefixed_environment(monkeypatch):
    monkeypatch.setenv("QCREG_SEED", "42")
    monkeypatch.setenv("QCREG_WITNESS_ATTEMPTS", "5")
    settings = get_settings()
    assert settings.seed == 42
    assert settings.witness_attempts == 5
    assert settings.identity_degree_cap == 6


def test_check_metrics_are_recorded(tmp_path):
    before = REGISTRY.get_sample_value("qcreg_check_total", {"check": "sample-step", "outcome": "pass"}) or 0
    with track_check("sample-step"):
        pass
    record_outcome("sample-step", "pass")
    after = REGISTRY.get_sample_value("qcreg_check_total", {"check": "sample-step", "outcome": "pass"})
    assert after == before + 1
    assert REGISTRY.get_sample_value("qcreg_check_latency_seconds_count", {"check": "sample-step"}) >= 1
    target = tmp_path / "metrics.prom"
    write_metrics(str(target))
    assert "qcreg_check_latency_seconds" in target.read_text()


def test_disabled_metrics(monkeypatch, tmp_path):
    monkeypatch.setenv("QCREG_METRICS_ENABLED", "false")
    with pytest.raises(RuntimeError):
        write_metrics(str(tmp_path / "metrics.prom"))


def test_error_reporting_is_off_without_dsn(monkeypatch):
    monkeypatch.delenv("QCREG_SENTRY_DSN", raising=False)
    assert init_error_reporting() is False
