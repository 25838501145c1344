"""
Scansione dei parametri (R, N) e scrittura dei risultati in CSV o JSON.

La griglia raggi × N viene distribuita su più thread; i record vengono
sempre riordinati per (R, N) prima della scrittura, quindi l'output non
dipende dall'ordine di completamento.
"""

import csv
import io
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from core import scenarios
from core.topology import ROUTING_SHORTEST, ROUTINGS

logger = logging.getLogger(__name__)

DEFAULT_RADII = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
DEFAULT_WORKERS = min(8, os.cpu_count() or 2)

FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_CSV, FORMAT_JSON)

NONE_IN_RANGE = 'none in range'

RECORD_FIELDS = ['N', 'R', 'e_avg_star', 'e_avg_ring', 'winner']


@dataclass(frozen=True)
class SweepConfig:
    regime: str
    n_min: int = 2
    n_max: int = 50
    radii: tuple = (1.0,)
    output_format: str = FORMAT_CSV
    output_path: str = '-'
    routing: str = ROUTING_SHORTEST
    workers: int = DEFAULT_WORKERS
    regime_options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n_min < 2:
            raise ValueError(f'n_min deve essere almeno 2 (n_min={self.n_min})')
        if self.n_max < self.n_min:
            raise ValueError(f'n_max ({self.n_max}) minore di n_min ({self.n_min})')
        if not self.radii:
            raise ValueError('Serve almeno un raggio')
        for r in self.radii:
            if not r > 0:
                raise ValueError(f'Raggio non valido: {r}')
        if self.output_format not in FORMATS:
            raise ValueError(f'Formato non valido: {self.output_format!r}')
        if self.routing not in ROUTINGS:
            raise ValueError(f'Instradamento non valido: {self.routing!r}')
        if self.workers < 1:
            raise ValueError(f'Numero di thread non valido: {self.workers}')

    def meta(self) -> dict:
        """Configurazione da riportare nell'output; i thread non cambiano i risultati."""
        meta = asdict(self)
        meta.pop('workers')
        meta['radii'] = list(self.radii)
        return meta


def run_sweep(regime, config: SweepConfig) -> list:
    """
    Valuta tutti i (R, N) della configurazione.
    Ritorna un ComparisonReport per raggio, nell'ordine dei raggi crescenti.
    """
    radii = sorted(set(config.radii))
    grid = [(r, n) for r in radii for n in range(config.n_min, config.n_max + 1)]
    logger.info('Scansione %s: %d raggi × N=%d..%d (%d punti, %d thread)',
                regime.name, len(radii), config.n_min, config.n_max,
                len(grid), config.workers)

    def evaluate(point):
        r, n = point
        return point, scenarios.evaluate(regime, n, r, routing=config.routing)

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = dict(pool.map(evaluate, grid))

    reports = []
    for r in radii:
        records = tuple(results[(r, n)] for n in range(config.n_min, config.n_max + 1))
        reports.append(scenarios.ComparisonReport(
            regime=regime.name,
            radius=r,
            records=records,
            crossover=scenarios.find_crossover(records),
        ))
    logger.info('Scansione completata: %d record', len(grid))
    return reports


# ─────────────────────────────────────────────────────────────────────────────
# Formattazione
# ─────────────────────────────────────────────────────────────────────────────

def format_number(x) -> str:
    """Numeri con 15 cifre significative (stabili tra piattaforme IEEE-754)."""
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, int):
        return str(x)
    return format(x, '.15g')


def _summary_line(report) -> str:
    s = report.summary()
    crossover = s['crossover'] if s['crossover'] is not None else NONE_IN_RANGE
    ties = ' '.join(str(n) for n in s['ties']) or '-'
    never = 'true' if s['ring_never_loses'] else 'false'
    return (f'# R={format_number(report.radius)} crossover={crossover} '
            f'ties={ties} ring_never_loses={never}')


def render_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(RECORD_FIELDS)
    for report in reports:
        for rec in report.records:
            row = rec.to_dict()
            writer.writerow([format_number(row[k]) for k in RECORD_FIELDS])
    for report in reports:
        buf.write(_summary_line(report) + '\n')
    return buf.getvalue()


def render_json(reports, meta: dict) -> str:
    summary = []
    for report in reports:
        s = report.summary()
        if s['crossover'] is None:
            s['crossover'] = NONE_IN_RANGE
        summary.append(s)
    payload = {
        'meta': meta,
        'records': [rec.to_dict() for report in reports for rec in report.records],
        'summary': summary,
    }
    return json.dumps(payload, indent=2, ensure_ascii=True) + '\n'


def render_table(header: list, rows) -> str:
    """CSV generico (figure): intestazione più righe di valori."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) if v is not None else NONE_IN_RANGE for v in row])
    return buf.getvalue()


def write_output(text: str, output_path: str) -> None:
    """Scrive il testo su file (ASCII), creando la cartella se manca."""
    os.makedirs(os.path.dirname(output_path) or '.', exist_ok=True)
    with open(output_path, 'w', encoding='ascii', newline='') as f:
        f.write(text)
    logger.info('Scritto %s (%d byte)', output_path, len(text))
