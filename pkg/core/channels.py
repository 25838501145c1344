"""
Modelli di canale rumoroso usati per distribuire le coppie entangled.

  Bit-flip           → |ψ+⟩ degrada nella miscela λ|ψ+⟩⟨ψ+| + (1−λ)|φ+⟩⟨φ+|,
                       con λ = (1 + e^(−d)) / 2
  Amplitude damping  → canale "osservato": l'ambiente viene monitorato e si
                       tiene solo il ramo senza perdita (evoluzione condizionata)

Le lunghezze d sono adimensionali, misurate in unità della lunghezza di
attenuazione del canale.
"""

import math
from dataclasses import dataclass

# Tolleranza sulla normalizzazione delle ampiezze
NORMALIZATION_TOLERANCE = 1e-12


def _check_length(d: float) -> None:
    if not d >= 0:
        raise ValueError(f'Lunghezza del canale non valida: d={d}')


@dataclass(frozen=True)
class BellDiagonalPair:
    """Coppia di rango 2 nella famiglia di Bell, descritta dal solo peso λ su |ψ+⟩."""
    fidelity: float

    def __post_init__(self):
        if not 0.0 <= self.fidelity <= 1.0:
            raise ValueError(f'Fedeltà fuori da [0, 1]: {self.fidelity}')

    @property
    def bias(self) -> float:
        """2λ − 1: è la grandezza che si moltiplica lungo il canale e negli swap."""
        return 2 * self.fidelity - 1


def fresh_pair() -> BellDiagonalPair:
    """Coppia massimamente entangled |ψ+⟩ appena generata."""
    return BellDiagonalPair(1.0)


@dataclass(frozen=True)
class AmplitudeDampJointState:
    """
    Stato puro sistema⊗ambiente dopo il canale amplitude damping:
      conditional → ramo |ψ'_c⟩|00⟩_E (nessuna perdita)
      loss_first  → |01⟩|10⟩_E
      loss_second → |10⟩|01⟩_E
      loss_both   → |00⟩|11⟩_E
    """
    decay_length: float
    conditional: float
    loss_first: float
    loss_second: float
    loss_both: float

    @property
    def amplitudes(self) -> tuple:
        return (self.conditional, self.loss_first, self.loss_second, self.loss_both)

    @property
    def norm_squared(self) -> float:
        return math.fsum(a * a for a in self.amplitudes)

    @property
    def conditional_probability(self) -> float:
        return self.conditional ** 2


@dataclass(frozen=True)
class ConditionalPureState:
    """Stato a1|00⟩ + a2|11⟩ ottenuto osservando l'ambiente nel ramo senza perdita."""
    amplitude_0: float
    amplitude_1: float
    observe_probability: float

    def __post_init__(self):
        norm = self.amplitude_0 ** 2 + self.amplitude_1 ** 2
        if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
            raise ValueError(f'Ampiezze non normalizzate (somma dei quadrati {norm})')
        if not 0.0 <= self.observe_probability <= 1.0:
            raise ValueError(f'Probabilità non valida: {self.observe_probability}')


# ─────────────────────────────────────────────────────────────────────────────
# Bit-flip
# ─────────────────────────────────────────────────────────────────────────────

def bitflip_lambda(d: float) -> float:
    """Peso su |ψ+⟩ dopo un tratto di lunghezza d: (1 + e^(−d)) / 2."""
    return (1 + bitflip_bias(d)) / 2


def bitflip_bias(d: float) -> float:
    """Fattore e^(−d) con cui un tratto moltiplica il bias 2λ−1."""
    _check_length(d)
    return math.exp(-d)


def transmit_bitflip(pair: BellDiagonalPair, d: float) -> BellDiagonalPair:
    """
    Invia una metà della coppia attraverso un tratto bit-flip di lunghezza d.
    Il bias 2λ−1 viene moltiplicato per e^(−d), quindi tratti successivi si
    compongono: a poi b equivale a a+b.
    """
    return BellDiagonalPair((1 + pair.bias * bitflip_bias(d)) / 2)


def transmitted_bias(segments) -> float:
    """
    Bias di una coppia appena generata dopo che una sua metà ha attraversato
    in sequenza i tratti dati. Resta nel bias per non arrotondare λ a ogni tratto.
    """
    bias = fresh_pair().bias
    for d in segments:
        bias *= bitflip_bias(d)
    return bias


# ─────────────────────────────────────────────────────────────────────────────
# Amplitude damping osservato
# ─────────────────────────────────────────────────────────────────────────────

def amplitude_damp_joint(d: float) -> AmplitudeDampJointState:
    """
    Distribuisce (|00⟩ + |11⟩)/√2 con entrambi i qubit nel canale amplitude
    damping; ritorna i quattro coefficienti dello stato congiunto con l'ambiente.
    """
    _check_length(d)
    e1 = math.exp(-d)
    e2 = math.exp(-2 * d)
    e4 = math.exp(-4 * d)
    single = e1 * math.sqrt(-math.expm1(-2 * d)) / math.sqrt(2)
    return AmplitudeDampJointState(
        decay_length=d,
        conditional=math.sqrt(1 + e4) / math.sqrt(2),
        loss_first=single,
        loss_second=single,
        loss_both=(1 - e2) / math.sqrt(2),
    )


def watched_condition(d: float) -> ConditionalPureState:
    """
    Stato osservato quando l'ambiente resta in |00⟩:
    (|00⟩ + e^(−2d)|11⟩) / √(1 + e^(−4d)), con probabilità (1 + e^(−4d)) / 2.
    """
    _check_length(d)
    e4 = math.exp(-4 * d)
    norm = math.sqrt(1 + e4)
    return ConditionalPureState(
        amplitude_0=1 / norm,
        amplitude_1=math.exp(-2 * d) / norm,
        observe_probability=(1 + e4) / 2,
    )
