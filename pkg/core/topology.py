"""
Geometria delle due disposizioni di rete: stella e anello.

Gli N utenti stanno su una circonferenza di raggio R, equidistanti.
  Stella → ogni utente è collegato al centro (hub) con un canale lungo R
  Anello → ogni utente è collegato ai due vicini con una corda 2R·sin(π/N)

Gli utenti sono numerati 1..N lungo la circonferenza; sull'anello la
separazione tra due utenti si calcola in modo modulare.
"""

import math
from dataclasses import dataclass
from enum import Enum

# Tolleranza relativa (scalata su N·R) per il pareggio del cavo totale
WIRE_TIE_TOLERANCE = 1e-12

ROUTING_SHORTEST = 'shortest'   # percorso più breve (verso orario o antiorario)
ROUTING_ONE_WAY = 'one-way'     # sempre nello stesso verso attorno all'anello
ROUTINGS = (ROUTING_SHORTEST, ROUTING_ONE_WAY)


class Layout(Enum):
    STAR = 'star'
    RING = 'ring'


class Winner(Enum):
    STAR = 'star'
    RING = 'ring'
    TIE = 'tie'


@dataclass(frozen=True)
class NetworkLayout:
    kind: Layout
    n_parties: int
    radius: float

    def __post_init__(self):
        if not isinstance(self.kind, Layout):
            raise ValueError(f'Topologia non valida: {self.kind!r}')
        if self.n_parties < 2:
            raise ValueError(f'Servono almeno 2 utenti (N={self.n_parties})')
        if not self.radius > 0:
            raise ValueError(f'Il raggio deve essere positivo (R={self.radius})')


@dataclass(frozen=True)
class PathSpec:
    """Percorso tra due utenti: n tratti (hops) di lunghezza d ciascuno."""
    wirelength: float
    hops: int

    def __post_init__(self):
        if self.hops < 1:
            raise ValueError(f'Numero di tratti non valido: {self.hops}')
        if not self.wirelength > 0:
            raise ValueError(f'Lunghezza del tratto non valida: {self.wirelength}')


@dataclass(frozen=True)
class RingWeights:
    """
    Pesi della media sull'anello con percorso più breve:
    le distanze 1..U compaiono due volte, la distanza N/2 (solo N pari) una volta.
    """
    u_bound: int
    mu: int


def wirelength(layout: NetworkLayout) -> float:
    """Lunghezza del singolo tratto: R per la stella, la corda tra vicini per l'anello."""
    if layout.kind is Layout.STAR:
        return layout.radius
    return 2 * layout.radius * math.sin(math.pi / layout.n_parties)


def path(layout: NetworkLayout, i: int, j: int) -> PathSpec:
    """
    Percorso tra gli utenti i e j (numerati 1..N).
    Stella: sempre 2 tratti passando per l'hub.
    Anello: il verso più breve, min(|i−j|, N−|i−j|) tratti.
    """
    n = layout.n_parties
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise ValueError(f'Utente {idx} fuori intervallo 1..{n}')
    if i == j:
        raise ValueError(f'Coppia non valida: utente {i} con sé stesso')

    if layout.kind is Layout.STAR:
        return PathSpec(wirelength=layout.radius, hops=2)

    sep = abs(i - j)
    return PathSpec(wirelength=wirelength(layout), hops=min(sep, n - sep))


def ring_weights(n_parties: int) -> RingWeights:
    if n_parties < 2:
        raise ValueError(f'Servono almeno 2 utenti (N={n_parties})')
    if n_parties % 2:
        return RingWeights(u_bound=(n_parties - 1) // 2, mu=0)
    return RingWeights(u_bound=n_parties // 2 - 1, mu=1)


def hop_weights(n_parties: int, routing: str = ROUTING_SHORTEST) -> dict:
    """
    Distribuzione dei numeri di tratti vista da un utente fissato verso gli
    altri N−1 utenti. Ritorna {n: peso} con pesi che sommano a 1.

    routing='shortest' → pesi 2/(N−1) per n in 1..U, più μ/(N−1) per n = N/2
    routing='one-way'  → peso 1/(N−1) per ogni n in 1..N−1
    """
    if routing not in ROUTINGS:
        raise ValueError(f'Instradamento non valido: {routing!r}')
    if n_parties < 2:
        raise ValueError(f'Servono almeno 2 utenti (N={n_parties})')

    norm = n_parties - 1
    if routing == ROUTING_ONE_WAY:
        return {n: 1 / norm for n in range(1, n_parties)}

    rw = ring_weights(n_parties)
    weights = {n: 2 / norm for n in range(1, rw.u_bound + 1)}
    if rw.mu:
        weights[n_parties // 2] = rw.mu / norm
    return weights


def total_wire(layout: NetworkLayout) -> float:
    """Cavo totale necessario: N raggi per la stella, N corde per l'anello."""
    return layout.n_parties * wirelength(layout)


def compare_wire(n_parties: int, radius: float) -> Winner:
    """Criterio classico: vince la disposizione che richiede meno cavo."""
    star = total_wire(NetworkLayout(Layout.STAR, n_parties, radius))
    ring = total_wire(NetworkLayout(Layout.RING, n_parties, radius))
    if abs(ring - star) <= WIRE_TIE_TOLERANCE * n_parties * radius:
        return Winner.TIE
    return Winner.RING if ring < star else Winner.STAR


def wire_crossover(radius: float, n_max: int):
    """Primo N (≥ 2) in cui l'anello richiede strettamente meno cavo, o None."""
    for n in range(2, n_max + 1):
        if compare_wire(n, radius) is Winner.RING:
            return n
    return None
