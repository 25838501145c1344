"""Modello euristico a risorse finite e sue istanze concrete."""

import math

import numpy as np
import pytest

from core import heuristic
from core.heuristic import HeuristicParams
from core.topology import Winner


def _random_params(rng):
    e_d = rng.uniform(0.0, 1.0)
    return HeuristicParams(
        e_distillable=e_d,
        delta_success=rng.uniform(0.0, 1.0 - e_d),
        delta_fail=rng.uniform(0.0, e_d),
        p_success=rng.uniform(0.0, 1.0),
    )


def test_certain_success_gives_boosted_value():
    params = HeuristicParams(0.4, 0.3, 0.2, 1.0)
    for n in (1, 2, 10):
        assert heuristic.heuristic_chain(params, n) == pytest.approx(0.7, abs=1e-15)


def test_two_forms_agree():
    rng = np.random.default_rng(3)
    for _ in range(500):
        params = _random_params(rng)
        n = int(rng.integers(1, 65))
        assert heuristic.heuristic_chain(params, n) == pytest.approx(
            heuristic.heuristic_chain_expanded(params, n), abs=1e-15
        )


def test_chain_non_increasing_in_hops():
    params = HeuristicParams(0.5, 0.2, 0.3, 0.8)
    values = [heuristic.heuristic_chain(params, n) for n in range(1, 30)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] >= 0.5 - 0.3


@pytest.mark.parametrize('fn', [heuristic.heuristic_chain, heuristic.heuristic_chain_expanded])
def test_chain_needs_one_hop(fn):
    with pytest.raises(ValueError):
        fn(HeuristicParams(0.5, 0.1, 0.1, 0.9), 0)


@pytest.mark.parametrize('args', [
    (0.8, 0.3, 0.1, 0.5),     # E_D + δs > 1
    (0.2, 0.1, 0.3, 0.5),     # E_D − δf < 0
    (0.5, 0.1, 0.1, 1.2),     # p > 1
    (0.5, -0.1, 0.1, 0.5),    # δ negativo
    (1.5, 0.0, 0.0, 0.5),     # E_D > 1
])
def test_invalid_params(args):
    with pytest.raises(ValueError):
        HeuristicParams(*args)


# ─── Amplitude damping osservato ─────────────────────────────────────────────

def test_amplitude_damp_success_probability():
    assert heuristic.amplitude_damp_params(0.0, 0.5).p_success == pytest.approx(1.0, abs=1e-15)
    assert heuristic.amplitude_damp_params(0.1, 0.5).p_success == pytest.approx(0.67032, abs=1e-5)


@pytest.mark.parametrize('e_d', [0.0, 0.3, 0.7, 1.0])
def test_amplitude_damp_chain_is_exponential(e_d):
    for k in range(41):
        d = 0.05 * k
        params = heuristic.amplitude_damp_params(d, e_d)
        for n in range(1, 33):
            assert heuristic.heuristic_chain(params, n) == pytest.approx(
                math.exp(-4 * n * d), abs=1e-12
            )


def test_amplitude_damp_regime_rejects_bad_e_d():
    with pytest.raises(ValueError, match='E_D'):
        heuristic.amplitude_damp_regime(1.3)


@pytest.mark.parametrize('r', [0.5, 1.0, 2.0])
def test_amplitude_damp_ring_never_loses(r):
    report = heuristic.heuristic_compare(
        lambda d: heuristic.amplitude_damp_params(d, 0.5), 50, radius=r
    )
    assert report.ring_never_loses
    assert report.ties == [2]
    assert report.crossover == 3


# ─── Interpolazione verso il caso asintotico ─────────────────────────────────

@pytest.mark.parametrize('k', range(1, 7))
def test_interpolation_close_to_distillable(k):
    delta = 10.0 ** (-k)
    params = HeuristicParams(0.4, delta, delta, 1 - delta)
    for n in range(1, 65):
        assert abs(heuristic.heuristic_chain(params, n) - 0.4) <= delta + 1e-15


def test_interpolation_params_clip_delta():
    params = heuristic.bitflip_interpolation_params(5.0, p_success=0.9, delta=0.1)
    assert params.delta_fail == params.e_distillable
    assert params.delta_success == 0.1


def test_interpolation_crossover_reaches_asymptotic():
    [row] = heuristic.interpolation_crossovers(1.0, 50, ks=[6])
    assert row['k'] == 6
    assert row['p_success'] == pytest.approx(1 - 1e-6, abs=1e-15)
    assert row['delta'] == pytest.approx(1e-6, abs=1e-18)
    assert row['crossover'] == 7


# ─── Confronti degeneri ──────────────────────────────────────────────────────

@pytest.mark.parametrize('params', [
    HeuristicParams(0.5, 0.0, 0.0, 1.0),
    HeuristicParams(0.5, 0.1, 0.2, 0.0),
])
def test_fixed_params_always_tie(params):
    report = heuristic.heuristic_compare(params, 20)
    assert report.ties == list(range(2, 21))
    assert report.crossover is None


def test_fixed_params_depend_on_hop_count():
    """Con p fisso conta solo Σ p^n contro p²: anello avanti finché i percorsi sono corti."""
    report = heuristic.heuristic_compare(HeuristicParams(0.5, 0.1, 0.1, 0.9), 15)
    winners = {r.n_parties: r.winner for r in report.records}
    assert all(winners[n] is Winner.RING for n in range(2, 8))
    assert all(winners[n] is Winner.STAR for n in range(8, 16))
    assert report.crossover == 2
    assert not report.ring_never_loses
