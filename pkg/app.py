"""
Stella o Anello - Interfaccia a riga di comando

Confronta le topologie a stella e ad anello per la distribuzione di
entanglement tra N utenti disposti su una circonferenza.

  python3 app.py compare --regime asymptotic --n-max 50 --radius 1
  python3 app.py sweep   --regime one-pair-traveling --format json
  python3 app.py figure  fig2 --radius 1 --n-max 50
  python3 app.py verify  --trials 1000 --seed 0
"""

import logging
import os
import sys

import click

sys.path.insert(0, os.path.dirname(__file__))

from core import heuristic, scenarios, sweep, topology, verification

REGIMES = (
    'asymptotic',
    'one-pair-traveling',
    'one-pair-per-wirelength',
    'heuristic',
    'heuristic-ad',
)

FIGURES = (
    'fig2',
    'fig3',
    'classical-wire',
    'heuristic-ad',
    'asymptotic',
    'heuristic-interp',
)

FIGURE_REGIMES = {
    'fig2': 'one-pair-traveling',
    'fig3': 'one-pair-per-wirelength',
    'asymptotic': 'asymptotic',
    'heuristic-ad': 'heuristic-ad',
}


# ─────────────────────────────────────────────────────────────────────────────
# Helper: costruzione del regime e scrittura dell'output
# ─────────────────────────────────────────────────────────────────────────────

def build_regime(name: str, options: dict) -> scenarios.ResourceRegime:
    """Traduce il nome del regime (e le opzioni euristiche) in un ResourceRegime."""
    if name == 'asymptotic':
        return scenarios.ResourceRegime.asymptotic()
    if name == 'one-pair-traveling':
        return scenarios.ResourceRegime.one_pair_traveling()
    if name == 'one-pair-per-wirelength':
        return scenarios.ResourceRegime.one_pair_per_wirelength()
    if name == 'heuristic-ad':
        return heuristic.amplitude_damp_regime(options['e_distillable'])
    if name == 'heuristic':
        params = heuristic.HeuristicParams(
            e_distillable=options['e_distillable'],
            delta_success=options['delta_success'],
            delta_fail=options['delta_fail'],
            p_success=options['p_success'],
        )
        return scenarios.ResourceRegime.heuristic(params)
    raise ValueError(f'Regime sconosciuto: {name!r}')


def _emit(text: str, output_path: str) -> None:
    if output_path in ('-', ''):
        click.echo(text, nl=False)
        return
    try:
        sweep.write_output(text, output_path)
    except OSError as e:
        raise click.ClickException(f'Impossibile scrivere {output_path}: {e}')


def _heuristic_options(f):
    f = click.option('--p-success', type=float, default=0.9, show_default=True,
                     help='Regime heuristic: probabilità di successo p per tratto.')(f)
    f = click.option('--delta-fail', type=float, default=0.1, show_default=True,
                     help='Regime heuristic: calo δf in caso di fallimento.')(f)
    f = click.option('--delta-success', type=float, default=0.1, show_default=True,
                     help='Regime heuristic: guadagno δs in caso di successo.')(f)
    f = click.option('--e-distillable', type=float, default=0.5, show_default=True,
                     help='Regimi heuristic e heuristic-ad: entanglement distillabile E_D.')(f)
    return f


def _sweep_options(default_radii):
    def decorator(f):
        f = _heuristic_options(f)
        f = click.option('--workers', type=int, default=sweep.DEFAULT_WORKERS,
                         show_default=True, help='Thread per la scansione.')(f)
        f = click.option('--routing', type=click.Choice(topology.ROUTINGS),
                         default=topology.ROUTING_SHORTEST, show_default=True,
                         help='Instradamento sull\'anello.')(f)
        f = click.option('--output', 'output_path', default='-', show_default=True,
                         help='File di destinazione (- = standard output).')(f)
        f = click.option('--format', 'output_format', type=click.Choice(sweep.FORMATS),
                         default=sweep.FORMAT_CSV, show_default=True)(f)
        f = click.option('--radius', 'radii', type=float, multiple=True,
                         default=default_radii, show_default=True,
                         help='Raggio R (ripetibile).')(f)
        f = click.option('--n-max', type=int, default=50, show_default=True)(f)
        f = click.option('--n-min', type=int, default=2, show_default=True)(f)
        f = click.option('--regime', type=click.Choice(REGIMES), required=True)(f)
        return f
    return decorator


def _run_compare(regime_name, n_min, n_max, radii, output_format, output_path,
                 routing, workers, e_distillable, delta_success, delta_fail, p_success):
    options = {
        'e_distillable': e_distillable,
        'delta_success': delta_success,
        'delta_fail': delta_fail,
        'p_success': p_success,
    }
    try:
        config = sweep.SweepConfig(
            regime=regime_name,
            n_min=n_min,
            n_max=n_max,
            radii=tuple(radii),
            output_format=output_format,
            output_path=output_path,
            routing=routing,
            workers=workers,
            regime_options=options if regime_name.startswith('heuristic') else {},
        )
        regime = build_regime(regime_name, options)
    except ValueError as e:
        raise click.UsageError(str(e))

    reports = sweep.run_sweep(regime, config)
    if config.output_format == sweep.FORMAT_JSON:
        text = sweep.render_json(reports, config.meta())
    else:
        text = sweep.render_csv(reports)
    _emit(text, config.output_path)


# ─────────────────────────────────────────────────────────────────────────────
# Comandi
# ─────────────────────────────────────────────────────────────────────────────

@click.group()
@click.option('-v', '--verbose', count=True, help='-v informazioni, -vv debug.')
def cli(verbose):
    """Confronto stella/anello per la distribuzione di entanglement."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


@cli.command('compare')
@_sweep_options(default_radii=(1.0,))
def cmd_compare(regime, n_min, n_max, radii, output_format, output_path,
                routing, workers, e_distillable, delta_success, delta_fail, p_success):
    """Un record per (N, R) e il punto di incrocio N* per ogni raggio."""
    _run_compare(regime, n_min, n_max, radii, output_format, output_path,
                 routing, workers, e_distillable, delta_success, delta_fail, p_success)


@cli.command('sweep')
@_sweep_options(default_radii=sweep.DEFAULT_RADII)
def cmd_sweep(regime, n_min, n_max, radii, output_format, output_path,
              routing, workers, e_distillable, delta_success, delta_fail, p_success):
    """Come compare, sulla griglia di raggi 0.1 0.5 1 2 5 10 se non indicata."""
    _run_compare(regime, n_min, n_max, radii, output_format, output_path,
                 routing, workers, e_distillable, delta_success, delta_fail, p_success)


@cli.command('figure')
@click.argument('figure_id', type=click.Choice(FIGURES))
@click.option('--radius', type=float, default=1.0, show_default=True)
@click.option('--n-max', type=int, default=50, show_default=True)
@click.option('--routing', type=click.Choice(topology.ROUTINGS),
              default=topology.ROUTING_SHORTEST, show_default=True)
@click.option('--e-distillable', type=float, default=0.5, show_default=True,
              help='Solo heuristic-ad: E_D prima della concentrazione.')
@click.option('--output', 'output_path', default='-', show_default=True)
def cmd_figure(figure_id, radius, n_max, routing, e_distillable, output_path):
    """Dati pronti per il grafico di una figura (CSV)."""
    if not radius > 0:
        raise click.UsageError(f'Il raggio deve essere positivo (R={radius})')
    if n_max < 2:
        raise click.UsageError(f'n_max deve essere almeno 2 (n_max={n_max})')

    if figure_id == 'classical-wire':
        rows = []
        for n in range(2, n_max + 1):
            star = topology.total_wire(topology.NetworkLayout(topology.Layout.STAR, n, radius))
            ring = topology.total_wire(topology.NetworkLayout(topology.Layout.RING, n, radius))
            rows.append((n, ring, star, topology.compare_wire(n, radius).value))
        text = sweep.render_table(['N', 'total_ring', 'total_star', 'winner'], rows)

    elif figure_id == 'heuristic-interp':
        rows = [
            (row['k'], row['p_success'], row['delta'], row['crossover'])
            for row in heuristic.interpolation_crossovers(radius, n_max)
        ]
        text = sweep.render_table(['k', 'p_success', 'delta', 'crossover'], rows)

    else:
        try:
            regime = build_regime(FIGURE_REGIMES[figure_id], {'e_distillable': e_distillable})
        except ValueError as e:
            raise click.UsageError(str(e))
        report = scenarios.compare(regime, radius, n_max, routing=routing)
        rows = [(r.n_parties, r.e_avg_ring, r.e_avg_star) for r in report.records]
        text = sweep.render_table(['N', 'e_avg_ring', 'e_avg_star'], rows)

    _emit(text, output_path)


@cli.command('verify')
@click.option('--trials', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--tolerance', type=float, default=verification.VERIFY_TOLERANCE,
              show_default=True)
def cmd_verify(trials, seed, tolerance):
    """Controlla le formule chiuse contro l'oracolo a matrici densità."""
    result = verification.run_verification(trials=trials, seed=seed, tolerance=tolerance)

    click.echo(f'trials={trials} seed={seed}')
    for name, check in result['checks'].items():
        status = 'OK' if check['ok'] else 'FAIL'
        click.echo(
            f'{name}: max_deviation={check["max_deviation"]:.6e} '
            f'tolerance={check["tolerance"]:.1e} samples={check["samples"]} {status}'
        )

    if not result['ok']:
        failure = result['failure']
        click.echo(
            f'FAILED {failure["check"]}: inputs={failure["inputs"]} '
            f'expected={failure["expected"]!r} actual={failure["actual"]!r}',
            err=True,
        )
        sys.exit(1)
    click.echo('all checks passed')


# ─────────────────────────────────────────────────────────────────────────────
# Avvio
# ─────────────────────────────────────────────────────────────────────────────

if __name__ == '__main__':
    cli()
