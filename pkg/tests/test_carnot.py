import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError

from carnot import (
    ColumnKind,
    HookOscillator,
    actual_work,
    amplify,
    bath_entropy_gain,
    carnot_efficiency,
    hook_energy,
    min_work,
    oscillator_temperature,
    photon_mode_energy,
    table1_summary,
)
from config import RegimeThresholds
from modes import CODATA, DomainError, Regime, RegimeError, canonic_ensemble_entropy, mode_entropy, occupancy


@pytest.fixture
def rng():
    return np.random.default_rng(2718)


# --- oscillator energetics -------------------------------------------------

@pytest.mark.parametrize("kappa, amplitude, energy", [(2, 1, 1.0), (2, 2, 4.0), (5, 0, 0.0)])
def test_hook_energy(kappa, amplitude, energy):
    assert hook_energy(HookOscillator(kappa=kappa, amplitude=amplitude)) == pytest.approx(energy)


def test_hook_energy_is_homogeneous(rng):
    for kappa, amplitude, scale in rng.uniform(0.1, 10.0, size=(50, 3)):
        energy = hook_energy(HookOscillator(kappa=kappa, amplitude=amplitude))
        wider = hook_energy(HookOscillator(kappa=kappa, amplitude=scale * amplitude))
        stiffer = hook_energy(HookOscillator(kappa=scale * kappa, amplitude=amplitude))
        assert wider == pytest.approx(scale ** 2 * energy, rel=1e-12)
        assert stiffer == pytest.approx(scale * energy, rel=1e-12)


def test_oscillator_needs_positive_spring():
    with pytest.raises(ValidationError):
        HookOscillator(kappa=0, amplitude=1)
    with pytest.raises(ValidationError):
        HookOscillator(kappa=1, amplitude=-1)


def test_oscillator_temperature():
    assert oscillator_temperature(CODATA.k_B * 300) == pytest.approx(300.0, rel=1e-12)
    assert oscillator_temperature(1.0) == pytest.approx(7.242971666e22, rel=1e-9)
    with pytest.raises(DomainError):
        oscillator_temperature(-1.0)


def test_laser_mode_temperature():
    energy = photon_mode_energy(1e16, 0.7e-6)
    temperature = oscillator_temperature(energy)
    assert 1e20 / 3 < temperature < 3e20
    assert temperature == pytest.approx(2.0554e20, rel=1e-3)


# --- Carnot efficiency and work ---------------------------------------------

def test_efficiency_examples():
    assert carnot_efficiency(300, 300) == 0.0
    assert carnot_efficiency(1 / CODATA.k_B, 4 / CODATA.k_B) == pytest.approx(0.75, rel=1e-12)
    assert carnot_efficiency(300, 3e20) == pytest.approx(1.0 - 1e-18)


@pytest.mark.parametrize("t_low, t_high", [(400, 300), (0, 300), (-1, 300), (300, math.inf)])
def test_efficiency_domain(t_low, t_high):
    with pytest.raises(DomainError):
        carnot_efficiency(t_low, t_high)


def test_efficiency_is_monotone(rng):
    for t_low, t_high, bump in rng.uniform(1.0, 1000.0, size=(100, 3)):
        t_low, t_high = sorted((t_low, t_high))
        base = carnot_efficiency(t_low, t_high)
        assert carnot_efficiency(t_low, t_high + bump) >= base
        assert carnot_efficiency(t_low * 0.5, t_high) >= base


def test_min_work():
    assert min_work(1, 4) == 3
    assert min_work(2, 2) == 0
    with pytest.raises(DomainError):
        min_work(4, 1)
    with pytest.raises(DomainError):
        min_work(-1, 4)


def test_work_fraction_equals_carnot_efficiency(rng):
    pairs = np.sort(rng.uniform(1e-3, 100.0, size=(1000, 2)), axis=1)
    for energy_low, energy_high in pairs:
        efficiency = carnot_efficiency(energy_low / CODATA.k_B, energy_high / CODATA.k_B)
        assert min_work(energy_low, energy_high) / energy_high == pytest.approx(efficiency, abs=1e-12)


def test_actual_work_off_resonance():
    assert actual_work(1, 4, 0.25) == pytest.approx(4.0)
    assert actual_work(1, 4) == 3.0
    with pytest.raises(DomainError):
        actual_work(1, 4, 1.0)


# --- amplify -----------------------------------------------------------------

def test_amplify_resonant():
    result = amplify(HookOscillator(kappa=2, amplitude=1), HookOscillator(kappa=2, amplitude=2))
    assert (result.energy_low, result.energy_high) == (1.0, 4.0)
    assert result.min_work == 3.0
    assert result.efficiency == pytest.approx(0.75)
    assert result.temperature_high == pytest.approx(4 / CODATA.k_B)
    assert result.actual_work == 3.0


def test_amplify_with_waste():
    result = amplify(HookOscillator(kappa=2, amplitude=1), HookOscillator(kappa=2, amplitude=2), waste_fraction=0.5)
    assert result.actual_work == pytest.approx(6.0)
    assert result.efficiency == pytest.approx(0.75)


def test_amplify_from_rest_has_no_efficiency():
    result = amplify(HookOscillator(kappa=2, amplitude=0), HookOscillator(kappa=2, amplitude=1))
    assert result.efficiency is None
    assert result.min_work == 1.0


def test_amplify_refuses_to_shrink():
    with pytest.raises(DomainError):
        amplify(HookOscillator(kappa=2, amplitude=2), HookOscillator(kappa=2, amplitude=1))


# --- relaxation into a bath ----------------------------------------------------

def test_lone_mode_entropy_ignores_its_energy():
    assert {mode_entropy(n, Regime.CLASSICAL) for n in (1e2, 1e8, 1e20)} == {1.0}


def test_dumping_energy_into_canonic_bath_raises_entropy():
    gain = bath_entropy_gain(10**6, 10.0, 10.0 - 1e-3)
    assert gain > 0
    assert gain == pytest.approx(0.41, rel=0.02)


def test_bath_gain_is_change_in_canonic_entropy():
    length, before, after = 500, 8.0, 7.5
    expected = (canonic_ensemble_entropy(occupancy(after), length)
                - canonic_ensemble_entropy(occupancy(before), length))
    assert bath_entropy_gain(length, before, after) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(length * (7.5 * math.exp(-7.5) - 8 * math.exp(-8)), rel=5e-3)


def test_bath_must_stay_canonic():
    with pytest.raises(RegimeError):
        bath_entropy_gain(10, 1.0, 0.5)


def test_bath_needs_modes():
    with pytest.raises(DomainError):
        bath_entropy_gain(0, 10.0, 9.0)


# --- two-regime table --------------------------------------------------------------

def test_table_high_occupation_column():
    high, canonic = table1_summary(0.001, 1e12, thresholds=RegimeThresholds())
    assert high.regime is ColumnKind.HIGH_OCCUPATION
    assert high.applicable and not canonic.applicable
    assert high.occupancy == pytest.approx(999.5, rel=1e-4)
    assert high.temperature == pytest.approx(high.occupancy * CODATA.h * 1e12 / CODATA.k_B)
    assert high.equilibrium_p == 0.5
    assert high.entropy == pytest.approx(math.log(2))
    assert (high.distribution, high.carnot_role) == ("Power-law", "Amplifier")
    assert canonic.temperature is None and canonic.entropy is None
    assert canonic.warnings


def test_table_canonic_column():
    high, canonic = table1_summary(12, 1e12, thresholds=RegimeThresholds())
    assert canonic.regime is ColumnKind.CANONIC
    assert canonic.applicable and not high.applicable
    assert canonic.occupancy == pytest.approx(6.144e-6, rel=1e-3)
    assert canonic.temperature == pytest.approx(CODATA.h * 1e12 / (12 * CODATA.k_B), rel=1e-5)
    assert canonic.entropy == pytest.approx(-canonic.occupancy * math.log(canonic.occupancy))
    assert canonic.entropy == canonic_ensemble_entropy(canonic.occupancy, 1)
    assert canonic.equilibrium_p == pytest.approx(canonic.occupancy, rel=1e-4)
    assert (canonic.distribution, canonic.carnot_role) == ("Exponential", "Heat engine")
    assert high.warnings and not canonic.warnings


def test_table_at_one_quantum_warns_for_both_columns(caplog):
    with caplog.at_level(logging.WARNING, logger="carnot"):
        high, canonic = table1_summary(math.log(2), 1e12, thresholds=RegimeThresholds())
    assert not high.applicable and not canonic.applicable
    assert canonic.temperature is None
    assert high.warnings and canonic.warnings
    assert "outside their regime" in caplog.text


@pytest.mark.parametrize("phi, freq", [(0.0, 1e12), (1.0, 0.0), (1.0, -5.0)])
def test_table_domain(phi, freq):
    with pytest.raises(DomainError):
        table1_summary(phi, freq)
