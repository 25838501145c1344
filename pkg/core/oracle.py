"""
Verifica indipendente con matrici densità esplicite.

Rappresenta le coppie come matrici 4×4 (16×16 per due coppie), applica il
canale bit-flip con operatori di Kraus e simula lo swapping con una misura di
Bell sui due qubit centrali. Serve a certificare le formule chiuse usate nel
resto del pacchetto, non a essere veloce.

Ordine dei qubit nei prodotti tensoriali: |q0 q1⟩ → indice 2·q0 + q1.
Per due coppie A-B1 e B2-C l'ordine è (A, B1, B2, C).
"""

import math
from dataclasses import dataclass

import numpy as np

from core import channels

# Tolleranze sugli invarianti di una matrice densità
STATE_TOLERANCE = 1e-10
# Autovalori sotto questa soglia contano come zero nell'entropia
EIGENVALUE_FLOOR = 1e-12

_SQRT_HALF = 1 / math.sqrt(2)

KET_00 = np.array([1, 0, 0, 0], dtype=complex)
KET_11 = np.array([0, 0, 0, 1], dtype=complex)

PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) * _SQRT_HALF
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) * _SQRT_HALF
PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) * _SQRT_HALF
PHI_MINUS = np.array([1, 0, 0, -1], dtype=complex) * _SQRT_HALF

BELL_BASIS = {
    'phi+': PHI_PLUS,
    'phi-': PHI_MINUS,
    'psi+': PSI_PLUS,
    'psi-': PSI_MINUS,
}

I2 = np.eye(2, dtype=complex)
PAULI = {
    'I': I2,
    'X': np.array([[0, 1], [1, 0]], dtype=complex),
    'Y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'Z': np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class DensityMatrix:
    """Matrice densità immutabile: hermitiana, traccia 1, semidefinita positiva."""
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f'Matrice non quadrata: forma {m.shape}')
        if m.shape[0] not in (2, 4, 16):
            raise ValueError(f'Dimensione non supportata: {m.shape[0]}')
        if not np.allclose(m, m.conj().T, atol=STATE_TOLERANCE, rtol=0):
            raise ValueError('Matrice non hermitiana')
        trace = np.trace(m).real
        if abs(trace - 1) > STATE_TOLERANCE:
            raise ValueError(f'Traccia diversa da 1: {trace}')
        if np.linalg.eigvalsh(m).min() < -STATE_TOLERANCE:
            raise ValueError('Matrice non semidefinita positiva')
        m.setflags(write=False)
        object.__setattr__(self, 'matrix', m)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def expectation(self, ket: np.ndarray) -> float:
        """⟨ψ|ρ|ψ⟩ (fedeltà rispetto allo stato puro ψ)."""
        return float(np.real(ket.conj() @ self.matrix @ ket))


def _require(state: DensityMatrix, dimension: int) -> None:
    if not isinstance(state, DensityMatrix):
        raise ValueError(f'Stato non valido: {state!r}')
    if state.dimension != dimension:
        raise ValueError(f'Attesa dimensione {dimension}, trovata {state.dimension}')


def projector(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, ket.conj())


def pure_state(ket: np.ndarray) -> DensityMatrix:
    ket = np.asarray(ket, dtype=complex)
    return DensityMatrix(projector(ket / np.linalg.norm(ket)))


def bell_diagonal_density(lam: float) -> DensityMatrix:
    """λ|ψ+⟩⟨ψ+| + (1−λ)|φ+⟩⟨φ+|."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f'λ fuori da [0, 1]: {lam}')
    return DensityMatrix(lam * projector(PSI_PLUS) + (1 - lam) * projector(PHI_PLUS))


def psi_plus_weight(state: DensityMatrix) -> float:
    _require(state, 4)
    return state.expectation(PSI_PLUS)


def off_family_norm(state: DensityMatrix) -> float:
    """
    Massimo elemento fuori dalla famiglia span{|ψ+⟩⟨ψ+|, |φ+⟩⟨φ+|}:
    zero per le miscele di rango 2 del canale bit-flip.
    """
    _require(state, 4)
    lam = state.expectation(PSI_PLUS)
    mu = state.expectation(PHI_PLUS)
    residual = state.matrix - lam * projector(PSI_PLUS) - mu * projector(PHI_PLUS)
    return float(np.abs(residual).max())


# ─────────────────────────────────────────────────────────────────────────────
# Canale bit-flip (Kraus)
# ─────────────────────────────────────────────────────────────────────────────

def apply_kraus(state: DensityMatrix, kraus_ops) -> DensityMatrix:
    """ρ → Σ_k K_k ρ K_k†."""
    rho = state.matrix
    new_rho = np.zeros_like(rho)
    for k in kraus_ops:
        new_rho = new_rho + k @ rho @ k.conj().T
    return DensityMatrix(new_rho)


def bitflip_kraus(d: float) -> list:
    """
    {√q·I, √(1−q)·X} sul qubit trasmesso (il secondo), con q = (1 + e^(−d))/2:
    |ψ+⟩ diventa q|ψ+⟩⟨ψ+| + (1−q)|φ+⟩⟨φ+|.
    """
    q = channels.bitflip_lambda(d)
    return [
        math.sqrt(q) * np.kron(I2, I2),
        math.sqrt(1 - q) * np.kron(I2, PAULI['X']),
    ]


def apply_bitflip_kraus(state: DensityMatrix, d: float) -> DensityMatrix:
    _require(state, 4)
    return apply_kraus(state, bitflip_kraus(d))


def transmit_density(segments) -> DensityMatrix:
    """Una metà di |ψ+⟩ attraversa in sequenza i tratti di lunghezza data."""
    state = pure_state(PSI_PLUS)
    for d in segments:
        state = apply_bitflip_kraus(state, d)
    return state


# ─────────────────────────────────────────────────────────────────────────────
# Entanglement swapping con misura di Bell
# ─────────────────────────────────────────────────────────────────────────────

def _project_middle(rho16: np.ndarray, bell: np.ndarray) -> np.ndarray:
    """
    Proietta i qubit centrali (B1, B2) su |β⟩ e li traccia via.
    Ritorna la matrice (non normalizzata) dei qubit esterni A, C.
    """
    t = rho16.reshape([2] * 8)   # indici: a b1 b2 c | a' b1' b2' c'
    beta = bell.reshape(2, 2)
    out = np.einsum('xy,axycbzwd,zw->acbd', beta.conj(), t, beta)
    return out.reshape(4, 4)


def _correction_table() -> dict:
    """
    Per ogni esito di Bell, la correzione di Pauli sul qubit C che riporta
    due coppie |ψ+⟩ perfette in |ψ+⟩. Ricavata simulando il caso ideale.
    """
    ideal = np.kron(projector(PSI_PLUS), projector(PSI_PLUS))
    table = {}
    for outcome, bell in BELL_BASIS.items():
        sigma = _project_middle(ideal, bell)
        sigma = sigma / np.trace(sigma).real
        for name, pauli in PAULI.items():
            u = np.kron(I2, pauli)
            corrected = u @ sigma @ u.conj().T
            if abs(np.real(PSI_PLUS.conj() @ corrected @ PSI_PLUS) - 1) < STATE_TOLERANCE:
                table[outcome] = name
                break
        else:
            raise RuntimeError(f'Nessuna correzione di Pauli per l\'esito {outcome}')
    return table


CORRECTIONS = _correction_table()


def swap_outcomes(pair_ab: DensityMatrix, pair_bc: DensityMatrix) -> list:
    """
    Misura di Bell sui qubit centrali, esito per esito.
    Ritorna una lista di dict: {'outcome', 'probability', 'correction', 'state'}
    con lo stato dei qubit esterni già corretto (None se l'esito ha probabilità 0).
    """
    _require(pair_ab, 4)
    _require(pair_bc, 4)
    rho16 = DensityMatrix(np.kron(pair_ab.matrix, pair_bc.matrix)).matrix

    results = []
    for outcome, bell in BELL_BASIS.items():
        sigma = _project_middle(rho16, bell)
        prob = float(np.trace(sigma).real)
        state = None
        if prob > EIGENVALUE_FLOOR:
            u = np.kron(I2, PAULI[CORRECTIONS[outcome]])
            state = DensityMatrix(u @ (sigma / prob) @ u.conj().T)
        results.append({
            'outcome': outcome,
            'probability': prob,
            'correction': CORRECTIONS[outcome],
            'state': state,
        })
    return results


def swap_via_bell_measurement(pair_ab: DensityMatrix, pair_bc: DensityMatrix) -> DensityMatrix:
    """Stato dei qubit esterni mediato sugli esiti, dopo la correzione di Pauli."""
    return average_outcomes(swap_outcomes(pair_ab, pair_bc))


def average_outcomes(results) -> DensityMatrix:
    """Media pesata con le probabilità degli stati ritornati da swap_outcomes."""
    averaged = np.zeros((4, 4), dtype=complex)
    for r in results:
        if r['state'] is not None:
            averaged = averaged + r['probability'] * r['state'].matrix
    return DensityMatrix(averaged)


def chain_swap_density(fidelities) -> DensityMatrix:
    """Catena di coppie bit-flip unite in sequenza con misure di Bell esplicite."""
    fidelities = list(fidelities)
    if not fidelities:
        raise ValueError('Catena vuota: serve almeno una coppia')
    state = bell_diagonal_density(fidelities[0])
    for f in fidelities[1:]:
        state = swap_via_bell_measurement(state, bell_diagonal_density(f))
    return state


# ─────────────────────────────────────────────────────────────────────────────
# Entropia
# ─────────────────────────────────────────────────────────────────────────────

def von_neumann_entropy(state: DensityMatrix) -> float:
    """S(ρ) = −Σ λ·log₂λ sugli autovalori sopra la soglia numerica."""
    if not isinstance(state, DensityMatrix):
        raise ValueError(f'Stato non valido: {state!r}')
    eig = np.linalg.eigvalsh(state.matrix)
    eig = eig[eig > EIGENVALUE_FLOOR]
    return float(max(0.0, -np.sum(eig * np.log2(eig))))


def maximally_mixed(dimension: int = 4) -> DensityMatrix:
    return DensityMatrix(np.eye(dimension, dtype=complex) / dimension)


def schmidt_state(amplitude_0: float, amplitude_1: float) -> DensityMatrix:
    """Stato puro a1|00⟩ + a2|11⟩."""
    return pure_state(amplitude_0 * KET_00 + amplitude_1 * KET_11)


def reduced_state(state: DensityMatrix) -> DensityMatrix:
    """Traccia parziale sul secondo qubit: stato 2×2 del primo."""
    _require(state, 4)
    t = state.matrix.reshape(2, 2, 2, 2)
    return DensityMatrix(np.einsum('ajbj->ab', t))
