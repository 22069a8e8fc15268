import pytest

import config


def test_default_thresholds():
    assert config.RegimeThresholds() == config.RegimeThresholds(classical_n=100.0, quantum_n=0.01)
    assert config.MadThresholds() == config.MadThresholds(close=0.006, acceptable=0.012)


def test_thresholds_are_frozen():
    with pytest.raises(AttributeError):
        config.MadThresholds().close = 0.1


def test_load_thresholds_follow_environment_values(monkeypatch):
    monkeypatch.setattr(config, "CLASSICAL_N", 50.0)
    monkeypatch.setattr(config, "MAD_ACCEPTABLE", 0.015)
    assert config.load_regime_thresholds().classical_n == 50.0
    assert config.load_mad_thresholds().acceptable == 0.015


@pytest.mark.parametrize("raw, seed", [(None, None), ("", None), ("  ", None), ("17", 17)])
def test_default_seed(monkeypatch, raw, seed):
    monkeypatch.setattr(config, "ENTROPY_MODES_SEED", raw)
    assert config.default_seed() == seed
