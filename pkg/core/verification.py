"""
Confronto sistematico oracolo ↔ formule chiuse.

Ogni controllo tiene traccia dello scostamento massimo e del caso peggiore.
Il risultato è un dict:
  {'ok', 'trials', 'seed', 'checks': {nome: {...}}, 'failure': {...} o None}
"""

import logging
import math

import numpy as np

from core import channels, entanglement, oracle

logger = logging.getLogger(__name__)

VERIFY_TOLERANCE = 1e-10      # controlli con matrici densità
ALGEBRA_TOLERANCE = 1e-12     # identità algebriche sui canali
MAX_CHAIN_LINKS = 6

ENTROPY_GRID = [round(0.1 * i, 1) for i in range(11)]
DAMPING_GRID = [round(0.1 * i, 1) for i in range(51)]


class _Check:
    """Scostamento massimo di un controllo e relativo caso peggiore."""

    def __init__(self, name: str, tolerance: float):
        self.name = name
        self.tolerance = tolerance
        self.max_deviation = 0.0
        self.worst = None
        self.samples = 0

    def record(self, inputs: dict, expected: float, actual: float) -> None:
        dev = abs(actual - expected)
        self.samples += 1
        if self.worst is None or dev > self.max_deviation:
            self.max_deviation = dev
            self.worst = {'inputs': inputs, 'expected': expected, 'actual': actual}
            logger.debug('%s: nuovo caso peggiore %.3g con %s', self.name, dev, inputs)

    @property
    def ok(self) -> bool:
        return self.max_deviation < self.tolerance

    def as_dict(self) -> dict:
        return {
            'ok': self.ok,
            'samples': self.samples,
            'max_deviation': self.max_deviation,
            'tolerance': self.tolerance,
            'worst_case': self.worst,
        }


def run_verification(trials: int = 1000, seed: int = 0,
                     tolerance: float = VERIFY_TOLERANCE) -> dict:
    if trials < 1:
        raise ValueError(f'Numero di prove non valido: {trials}')

    logger.info('Verifica oracolo: %d prove, seed %d', trials, seed)
    rng = np.random.default_rng(seed)

    swap = _Check('swap_fidelity', tolerance)
    spread = _Check('swap_outcome_spread', tolerance)
    closure = _Check('bell_family_closure', ALGEBRA_TOLERANCE)
    entropy = _Check('entropy', tolerance)
    chain = _Check('chain_vs_transmission', tolerance)
    semigroup = _Check('kraus_semigroup', ALGEBRA_TOLERANCE)
    joint_norm = _Check('amplitude_damp_normalization', ALGEBRA_TOLERANCE)
    branch = _Check('conditional_branch_probability', ALGEBRA_TOLERANCE)
    success = _Check('observation_times_concentration', ALGEBRA_TOLERANCE)
    pure_entropy = _Check('conditional_state_entropy', tolerance)

    # ── Swapping: formula chiusa contro misura di Bell esplicita ─────────────
    for f_a, f_b in rng.random((trials, 2)):
        f_a, f_b = float(f_a), float(f_b)
        inputs = {'F_a': f_a, 'F_b': f_b}
        outcomes = oracle.swap_outcomes(
            oracle.bell_diagonal_density(f_a), oracle.bell_diagonal_density(f_b)
        )
        averaged = oracle.average_outcomes(outcomes)
        expected = entanglement.swap_fidelity(f_a, f_b)
        swap.record(inputs, expected, oracle.psi_plus_weight(averaged))
        closure.record(inputs, 0.0, oracle.off_family_norm(averaged))

        lams = [oracle.psi_plus_weight(r['state']) for r in outcomes if r['state'] is not None]
        spread.record(inputs, 0.0, max(lams) - min(lams))

    # ── Entropia di von Neumann contro H₂(λ) ────────────────────────────────
    for lam in ENTROPY_GRID:
        rho = oracle.bell_diagonal_density(lam)
        entropy.record({'lambda': lam}, entanglement.binary_entropy(lam),
                       oracle.von_neumann_entropy(rho))
    entropy.record({'state': 'maximally_mixed'}, 2.0,
                   oracle.von_neumann_entropy(oracle.maximally_mixed(4)))

    # ── Catena di swap contro una coppia sola su n·d ─────────────────────────
    chain_trials = max(1, trials // 10)
    for d in rng.uniform(0.0, 3.0, chain_trials):
        d = float(d)
        for n in range(1, MAX_CHAIN_LINKS + 1):
            links = [channels.bitflip_lambda(d)] * n
            state = oracle.chain_swap_density(links)
            inputs = {'d': d, 'n': n}
            chain.record(inputs, entanglement.chain_swap(links), oracle.psi_plus_weight(state))
            chain.record(inputs, channels.bitflip_lambda(n * d), oracle.psi_plus_weight(state))
            bias = entanglement.chain_swap_bias([channels.bitflip_bias(d)] * n)
            chain.record(inputs, (1 + bias) / 2, oracle.psi_plus_weight(state))
            closure.record(inputs, 0.0, oracle.off_family_norm(state))

    # ── Kraus: a poi b equivale a a+b ────────────────────────────────────────
    for a, b in rng.uniform(0.0, 3.0, (chain_trials, 2)):
        a, b = float(a), float(b)
        two_steps = oracle.transmit_density([a, b])
        one_step = oracle.transmit_density([a + b])
        semigroup.record({'a': a, 'b': b}, 0.0,
                         float(np.abs(two_steps.matrix - one_step.matrix).max()))

    # ── Amplitude damping osservato ─────────────────────────────────────────
    for d in DAMPING_GRID:
        inputs = {'d': d}
        joint = channels.amplitude_damp_joint(d)
        joint_norm.record(inputs, 1.0, joint.norm_squared)

        observed = channels.watched_condition(d)
        branch.record(inputs, observed.observe_probability, joint.conditional_probability)

        p = observed.observe_probability * entanglement.procrustean_success(
            observed.amplitude_0, observed.amplitude_1
        )
        success.record(inputs, math.exp(-4 * d), p)

        rho = oracle.schmidt_state(observed.amplitude_0, observed.amplitude_1)
        pure_entropy.record(
            inputs,
            entanglement.pure_state_entanglement(observed.amplitude_0, observed.amplitude_1),
            oracle.von_neumann_entropy(oracle.reduced_state(rho)),
        )

    checks = [swap, spread, closure, entropy, chain, semigroup,
              joint_norm, branch, success, pure_entropy]
    failure = None
    for c in checks:
        if not c.ok:
            logger.warning('Controllo %s fallito: scostamento %.3g (tolleranza %.1g)',
                           c.name, c.max_deviation, c.tolerance)
            if failure is None:
                failure = {'check': c.name, **c.worst}

    result = {
        'ok': failure is None,
        'trials': trials,
        'seed': seed,
        'checks': {c.name: c.as_dict() for c in checks},
        'failure': failure,
    }
    logger.info('Verifica completata: %s', 'OK' if result['ok'] else 'FALLITA')
    return result
