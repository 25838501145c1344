"""
Modello euristico a risorse finite.

Su ogni tratto la distillazione riesce con probabilità p e porta
l'entanglement a E_D + δs, altrimenti fallisce e lo lascia a E_D − δf.
Unendo n tratti con lo swapping conta il tratto peggiore, quindi su n tratti:

    p^n·(E_D + δs) + (1 − p^n)·(E_D − δf)  =  E_D + p^n·(δs + δf) − δf

Per p → 1 e δ → 0 si ritrova il caso asintotico (conta solo E_D del tratto);
con δ dell'ordine di E_D il confronto si riduce a Σ p^n contro p².
"""

import logging
from dataclasses import dataclass
from functools import partial

from core import channels, entanglement

logger = logging.getLogger(__name__)

# Margine numerico sui vincoli E_D + δs ≤ 1 e E_D − δf ≥ 0
PARAMS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class HeuristicParams:
    e_distillable: float
    delta_success: float
    delta_fail: float
    p_success: float

    def __post_init__(self):
        if not 0.0 <= self.e_distillable <= 1.0:
            raise ValueError(f'E_D fuori da [0, 1]: {self.e_distillable}')
        if self.delta_success < 0 or self.delta_fail < 0:
            raise ValueError(
                f'δ negativi non ammessi (δs={self.delta_success}, δf={self.delta_fail})'
            )
        if not 0.0 <= self.p_success <= 1.0:
            raise ValueError(f'p fuori da [0, 1]: {self.p_success}')
        if self.e_distillable + self.delta_success > 1 + PARAMS_TOLERANCE:
            raise ValueError(
                f'E_D + δs supera 1 ebit ({self.e_distillable} + {self.delta_success})'
            )
        if self.e_distillable - self.delta_fail < -PARAMS_TOLERANCE:
            raise ValueError(
                f'E_D − δf negativo ({self.e_distillable} − {self.delta_fail})'
            )


def heuristic_chain(params: HeuristicParams, n: int) -> float:
    """Entanglement medio ottenuto su n tratti (forma con i due esiti)."""
    if n < 1:
        raise ValueError(f'Numero di tratti non valido: {n}')
    pn = params.p_success ** n
    boosted = params.e_distillable + params.delta_success
    failed = params.e_distillable - params.delta_fail
    return pn * boosted + (1 - pn) * failed


def heuristic_chain_expanded(params: HeuristicParams, n: int) -> float:
    """Stessa quantità nella forma E_D + p^n(δs + δf) − δf."""
    if n < 1:
        raise ValueError(f'Numero di tratti non valido: {n}')
    pn = params.p_success ** n
    return (params.e_distillable
            + pn * (params.delta_success + params.delta_fail)
            - params.delta_fail)


# ─────────────────────────────────────────────────────────────────────────────
# Istanze concrete del modello
# ─────────────────────────────────────────────────────────────────────────────

def amplitude_damp_params(d: float, e_distillable: float) -> HeuristicParams:
    """
    Canale amplitude damping osservato + concentrazione procrustea.
    p = P(osservazione) × P(concentrazione) = e^(−4d); in caso di successo si
    ottiene uno stato massimamente entangled (δs = 1 − E_D), altrimenti nulla
    (δf = E_D).
    """
    observed = channels.watched_condition(d)
    concentrate = entanglement.procrustean_success(
        observed.amplitude_0, observed.amplitude_1
    )
    return HeuristicParams(
        e_distillable=e_distillable,
        delta_success=1 - e_distillable,
        delta_fail=e_distillable,
        p_success=observed.observe_probability * concentrate,
    )


def bitflip_interpolation_params(d: float, p_success: float, delta: float) -> HeuristicParams:
    """
    E_D preso dal canale bit-flip sul singolo tratto, con successo p e
    fluttuazione δ (tagliata per restare in [0, 1]).
    """
    e_d = entanglement.distillable_from_bias(channels.bitflip_bias(d))
    return HeuristicParams(
        e_distillable=e_d,
        delta_success=min(delta, 1 - e_d),
        delta_fail=min(delta, e_d),
        p_success=p_success,
    )


def amplitude_damp_regime(e_distillable: float):
    """Regime euristico in cui p dipende dalla lunghezza del tratto (stella d=R, anello la corda)."""
    from core.scenarios import ResourceRegime

    if not 0.0 <= e_distillable <= 1.0:
        raise ValueError(f'E_D fuori da [0, 1]: {e_distillable}')
    return ResourceRegime.heuristic(
        partial(amplitude_damp_params, e_distillable=e_distillable),
        name='heuristic-ad',
    )


def heuristic_compare(params, n_parties: int, radius: float = 1.0, **kwargs):
    """
    Confronto stella/anello per N = 2..n_parties con il modello euristico.
    params può essere un HeuristicParams fisso (d irrilevante) oppure una
    funzione d → HeuristicParams.
    """
    from core import scenarios

    regime = scenarios.ResourceRegime.heuristic(params)
    return scenarios.compare(regime, radius, n_parties, **kwargs)


def interpolation_crossovers(radius: float, n_max: int, ks=range(1, 7)) -> list:
    """
    Punto di incrocio N* lungo la famiglia p = 1 − 10^(−k), δ = 10^(−k):
    per k piccolo domina la probabilità p^n, per k grande il caso asintotico.

    Ritorna una lista di dict: {'k', 'p_success', 'delta', 'crossover'}.
    """
    from core import scenarios

    rows = []
    for k in ks:
        delta = 10.0 ** (-k)
        p = 1 - delta
        regime = scenarios.ResourceRegime.heuristic(
            partial(bitflip_interpolation_params, p_success=p, delta=delta),
            name=f'heuristic-interp-k{k}',
        )
        report = scenarios.compare(regime, radius, n_max)
        logger.debug('k=%s p=%s δ=%s → N*=%s', k, p, delta, report.crossover)
        rows.append({
            'k': k,
            'p_success': p,
            'delta': delta,
            'crossover': report.crossover,
        })
    return rows
