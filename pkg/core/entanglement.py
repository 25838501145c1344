"""
Aritmetica di entanglement e fedeltà.

Tutte le entropie sono in base 2: l'entanglement è espresso in ebit e una
singola coppia di qubit ne porta al massimo 1. I valori di entanglement sono
float in [0, 1].
"""

import math
import operator
from functools import reduce

# Tolleranza sulla normalizzazione delle ampiezze in ingresso
AMPLITUDE_TOLERANCE = 1e-9

# Sotto questo bias si usa la serie di potenze (niente cancellazione)
_SERIES_THRESHOLD = 1e-4

_TWO_LN2 = 2 * math.log(2)


def _check_unit(name: str, x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f'{name} fuori da [0, 1]: {x}')


def _check_amplitudes(amplitude_0: float, amplitude_1: float) -> None:
    norm = amplitude_0 ** 2 + amplitude_1 ** 2
    if abs(norm - 1.0) > AMPLITUDE_TOLERANCE:
        raise ValueError(
            f'Ampiezze non normalizzate: {amplitude_0}, {amplitude_1} '
            f'(somma dei quadrati {norm})'
        )


def binary_entropy(x: float) -> float:
    """H₂(x) = −x·log₂x − (1−x)·log₂(1−x), con H₂(0) = H₂(1) = 0."""
    _check_unit('Probabilità', x)
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def distillable_rank2(lam: float) -> float:
    """
    Entanglement distillabile della miscela λ|ψ+⟩⟨ψ+| + (1−λ)|φ+⟩⟨φ+|:
    max(0, 1 − H₂(λ)).

    La precisione relativa è limitata da λ stesso: vicino a 1/2 il bias
    2λ−1 ha un errore assoluto di ~1e−16. Se il bias è già noto conviene
    distillable_from_bias.
    """
    _check_unit('λ', lam)
    return distillable_from_bias(2 * lam - 1)


def distillable_from_bias(bias: float) -> float:
    """
    Stessa quantità espressa nel bias t = 2λ−1, senza cancellazioni:
    ((1+t)·ln(1+t) + (1−t)·ln(1−t)) / (2 ln 2), serie di potenze per |t| piccolo.
    """
    if not -1.0 <= bias <= 1.0:
        raise ValueError(f'Bias fuori da [−1, 1]: {bias}')
    t = abs(bias)
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return 1.0
    if t < _SERIES_THRESHOLD:
        t2 = t * t
        value = t2 * (1 + t2 / 6 + t2 * t2 / 15) / _TWO_LN2
    else:
        value = ((1 + t) * math.log1p(t) + (1 - t) * math.log1p(-t)) / _TWO_LN2
    return min(1.0, max(0.0, value))


def swap_fidelity(f_a: float, f_b: float) -> float:
    """
    Fedeltà della coppia ottenuta unendo due coppie con un entanglement swapping:
    1 + 2·Fa·Fb − Fa − Fb, cioè 2F−1 = (2Fa−1)(2Fb−1).
    """
    _check_unit('Fa', f_a)
    _check_unit('Fb', f_b)
    return min(1.0, max(0.0, 1 + 2 * f_a * f_b - f_a - f_b))


def chain_swap(fidelities) -> float:
    """
    Fedeltà finale di una catena di coppie unite in sequenza (da sinistra).
    Per la famiglia bit-flip l'ordine non conta: vale (1 + Π(2Fi−1)) / 2.
    """
    fidelities = list(fidelities)
    if not fidelities:
        raise ValueError('Catena vuota: serve almeno una coppia')
    for f in fidelities:
        _check_unit('Fedeltà', f)
    return reduce(swap_fidelity, fidelities)


def chain_swap_bias(biases) -> float:
    """
    Catena espressa nei bias 2F−1: lo swapping li moltiplica, da sinistra.
    Tratti identici danno lo stesso prodotto di una coppia che li attraversa
    uno dopo l'altro (channels.transmitted_bias).
    """
    biases = list(biases)
    if not biases:
        raise ValueError('Catena vuota: serve almeno una coppia')
    for b in biases:
        if not -1.0 <= b <= 1.0:
            raise ValueError(f'Bias fuori da [−1, 1]: {b}')
    return reduce(operator.mul, biases)


def procrustean_success(amplitude_0: float, amplitude_1: float) -> float:
    """
    Probabilità che il metodo procrusteo concentri a1|00⟩ + a2|11⟩ in uno
    stato massimamente entangled: il doppio del quadrato del coefficiente minore.
    """
    _check_amplitudes(amplitude_0, amplitude_1)
    return min(1.0, 2 * min(amplitude_0 ** 2, amplitude_1 ** 2))


def pure_state_entanglement(amplitude_0: float, amplitude_1: float) -> float:
    """Entropia di entanglement di uno stato puro in forma di Schmidt."""
    _check_amplitudes(amplitude_0, amplitude_1)
    return binary_entropy(min(1.0, amplitude_1 ** 2))
