import pytest

from nugg.utils.settings import (
    ENV_BRUTE_FORCE_MAX_NODES,
    ENV_THREADS,
    ENV_VERBOSE,
    NuggSettings,
    get_settings,
)


def test_defaults(monkeypatch) -> None:
    for name in (ENV_THREADS, ENV_VERBOSE, ENV_BRUTE_FORCE_MAX_NODES):
        monkeypatch.delenv(name, raising=False)
    settings = NuggSettings()
    assert settings.threads == 0
    assert settings.verbose == ""
    assert settings.brute_force_max_nodes == 20000
    assert not settings.enable_analytics


def test_environment_overrides(monkeypatch) -> None:
    monkeypatch.setenv(ENV_THREADS, "3")
    monkeypatch.setenv(ENV_BRUTE_FORCE_MAX_NODES, "10")
    settings = NuggSettings()
    assert settings.threads == 3
    assert settings.brute_force_max_nodes == 10


def test_invalid_environment(monkeypatch) -> None:
    monkeypatch.setenv(ENV_THREADS, "many")
    with pytest.raises(ValueError):
        NuggSettings()


def test_settings_are_cached() -> None:
    assert get_settings() is get_settings()
