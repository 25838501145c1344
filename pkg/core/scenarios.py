"""
Regimi di risorse, medie stella/anello e ricerca del punto di incrocio.

E(d, n) è l'entanglement distribuito tra due utenti separati da n tratti di
lunghezza d. Le medie su tutte le coppie di utenti:
  Stella → E(R, 2)
  Anello → (1/(N−1))·[2·Σ_{n=1..U} E(d, n) + μ·E(d, N/2)],  d = 2R·sin(π/N)

Il punto di incrocio N* è il più piccolo N in cui l'anello distribuisce
strettamente più entanglement della stella.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from core import channels, entanglement, heuristic
from core.topology import (
    ROUTING_SHORTEST, Layout, NetworkLayout, Winner, hop_weights, wirelength,
)

logger = logging.getLogger(__name__)

# Pareggio se |anello − stella| ≤ TIE_TOLERANCE · max(|anello|, |stella|)
TIE_TOLERANCE = 1e-9


class RegimeKind(Enum):
    ASYMPTOTIC = 'asymptotic'
    ONE_PAIR_TRAVELING = 'one-pair-traveling'
    ONE_PAIR_PER_WIRELENGTH = 'one-pair-per-wirelength'
    HEURISTIC = 'heuristic'
    CUSTOM = 'custom'


def bitflip_distillable(d: float) -> float:
    """E_D di una coppia che ha attraversato un tratto bit-flip di lunghezza d."""
    return entanglement.distillable_from_bias(channels.bitflip_bias(d))


@dataclass(frozen=True)
class ResourceRegime:
    """
    Un metodo di distribuzione. Si costruisce con i costruttori di classe:
    asymptotic(), one_pair_traveling(), one_pair_per_wirelength(),
    heuristic(params), custom(pair_function).
    """
    kind: RegimeKind
    name: str
    distillable: Optional[Callable[[float], float]] = None
    params: object = None
    pair_function: Optional[Callable[[float, int], float]] = None

    @classmethod
    def asymptotic(cls, distillable=None, name: str = 'asymptotic'):
        """Infinite coppie per tratto: conta solo E_D(d), non il numero di tratti."""
        return cls(RegimeKind.ASYMPTOTIC, name, distillable=distillable or bitflip_distillable)

    @classmethod
    def one_pair_traveling(cls):
        return cls(RegimeKind.ONE_PAIR_TRAVELING, RegimeKind.ONE_PAIR_TRAVELING.value)

    @classmethod
    def one_pair_per_wirelength(cls):
        return cls(RegimeKind.ONE_PAIR_PER_WIRELENGTH, RegimeKind.ONE_PAIR_PER_WIRELENGTH.value)

    @classmethod
    def heuristic(cls, params, name: str = 'heuristic'):
        """params: HeuristicParams fisso, oppure funzione d → HeuristicParams."""
        if not (isinstance(params, heuristic.HeuristicParams) or callable(params)):
            raise ValueError(f'Parametri euristici non validi: {params!r}')
        return cls(RegimeKind.HEURISTIC, name, params=params)

    @classmethod
    def custom(cls, pair_function, name: str = 'custom'):
        """Qualsiasi E(d, n) fornita dall'utente (ad es. un numero intermedio di coppie)."""
        if not callable(pair_function):
            raise ValueError(f'Funzione E(d, n) non valida: {pair_function!r}')
        return cls(RegimeKind.CUSTOM, name, pair_function=pair_function)

    def heuristic_params(self, d: float):
        if isinstance(self.params, heuristic.HeuristicParams):
            return self.params
        return self.params(d)


@dataclass(frozen=True)
class ComparisonRecord:
    n_parties: int
    radius: float
    e_avg_star: float
    e_avg_ring: float
    winner: Winner

    def to_dict(self) -> dict:
        return {
            'N': self.n_parties,
            'R': self.radius,
            'e_avg_star': self.e_avg_star,
            'e_avg_ring': self.e_avg_ring,
            'winner': self.winner.value,
        }


@dataclass(frozen=True)
class ComparisonReport:
    regime: str
    radius: float
    records: tuple = field(default_factory=tuple)
    crossover: Optional[int] = None

    @property
    def ties(self) -> list:
        return [r.n_parties for r in self.records if r.winner is Winner.TIE]

    @property
    def ring_never_loses(self) -> bool:
        return all(r.winner is not Winner.STAR for r in self.records)

    def summary(self) -> dict:
        return {
            'regime': self.regime,
            'R': self.radius,
            'crossover': self.crossover,
            'ties': self.ties,
            'ring_never_loses': self.ring_never_loses,
        }


# ─────────────────────────────────────────────────────────────────────────────
# E(d, n) e medie
# ─────────────────────────────────────────────────────────────────────────────

def pair_entanglement(regime: ResourceRegime, d: float, n: int) -> float:
    """Entanglement distribuito su n tratti di lunghezza d nel regime dato."""
    if n < 1:
        raise ValueError(f'Numero di tratti non valido: {n}')
    if not d >= 0:
        raise ValueError(f'Lunghezza del tratto non valida: d={d}')

    kind = regime.kind
    if kind is RegimeKind.ASYMPTOTIC:
        return regime.distillable(d)
    if kind is RegimeKind.ONE_PAIR_TRAVELING:
        # una sola coppia: una metà attraversa tutti gli n tratti
        return entanglement.distillable_from_bias(channels.transmitted_bias([d] * n))
    if kind is RegimeKind.ONE_PAIR_PER_WIRELENGTH:
        # stessi prodotti, nello stesso ordine, della coppia che viaggia
        links = [channels.bitflip_bias(d)] * n
        return entanglement.distillable_from_bias(entanglement.chain_swap_bias(links))
    if kind is RegimeKind.HEURISTIC:
        return heuristic.heuristic_chain(regime.heuristic_params(d), n)
    return regime.pair_function(d, n)


def avg_entanglement_star(regime: ResourceRegime, n_parties: int, radius: float) -> float:
    """Media sulla stella: ogni coppia usa 2 tratti di lunghezza R, indipendente da N."""
    layout = NetworkLayout(Layout.STAR, n_parties, radius)
    return pair_entanglement(regime, wirelength(layout), 2)


def avg_entanglement_ring(regime: ResourceRegime, n_parties: int, radius: float,
                          routing: str = ROUTING_SHORTEST) -> float:
    """Media sull'anello pesata con la distribuzione dei numeri di tratti."""
    layout = NetworkLayout(Layout.RING, n_parties, radius)
    d = wirelength(layout)
    weights = hop_weights(n_parties, routing)
    return sum(w * pair_entanglement(regime, d, n) for n, w in sorted(weights.items()))


def classify(e_star: float, e_ring: float, tie_tolerance: float = TIE_TOLERANCE) -> Winner:
    scale = max(abs(e_star), abs(e_ring))
    if scale == 0.0 or abs(e_ring - e_star) <= tie_tolerance * scale:
        return Winner.TIE
    return Winner.RING if e_ring > e_star else Winner.STAR


def evaluate(regime: ResourceRegime, n_parties: int, radius: float,
             routing: str = ROUTING_SHORTEST,
             tie_tolerance: float = TIE_TOLERANCE) -> ComparisonRecord:
    star = avg_entanglement_star(regime, n_parties, radius)
    ring = avg_entanglement_ring(regime, n_parties, radius, routing)
    logger.debug('%s N=%d R=%s stella=%.15g anello=%.15g',
                 regime.name, n_parties, radius, star, ring)
    return ComparisonRecord(
        n_parties=n_parties,
        radius=radius,
        e_avg_star=star,
        e_avg_ring=ring,
        winner=classify(star, ring, tie_tolerance),
    )


def find_crossover(records) -> Optional[int]:
    """Primo N con vittoria stretta dell'anello, o None."""
    for r in sorted(records, key=lambda r: r.n_parties):
        if r.winner is Winner.RING:
            return r.n_parties
    return None


def compare(regime: ResourceRegime, radius: float, n_max: int, n_min: int = 2,
            routing: str = ROUTING_SHORTEST,
            tie_tolerance: float = TIE_TOLERANCE) -> ComparisonReport:
    """Confronta stella e anello per N = n_min..n_max a raggio fissato."""
    if n_min < 2:
        raise ValueError(f'Servono almeno 2 utenti (n_min={n_min})')
    if n_max < n_min:
        raise ValueError(f'Intervallo di N vuoto ({n_min}..{n_max})')
    if not radius > 0:
        raise ValueError(f'Il raggio deve essere positivo (R={radius})')

    records = tuple(
        evaluate(regime, n, radius, routing, tie_tolerance)
        for n in range(n_min, n_max + 1)
    )
    return ComparisonReport(
        regime=regime.name,
        radius=radius,
        records=records,
        crossover=find_crossover(records),
    )
