"""Riga di comando: compare, sweep, figure, verify."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from app import cli


@pytest.fixture
def runner():
    return CliRunner()


def _rows(output):
    lines = [line for line in output.splitlines() if not line.startswith('#')]
    return list(csv.DictReader(io.StringIO('\n'.join(lines))))


def _summaries(output):
    return [line for line in output.splitlines() if line.startswith('#')]


# ─── compare / sweep ─────────────────────────────────────────────────────────

def test_compare_asymptotic_csv(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'asymptotic', '--n-max', '10'])
    assert result.exit_code == 0, result.output
    rows = _rows(result.output)
    assert [int(r['N']) for r in rows] == list(range(2, 11))
    winners = {int(r['N']): r['winner'] for r in rows}
    assert winners[5] == 'star'
    assert winners[6] == 'tie'
    assert winners[7] == 'ring'
    assert _summaries(result.output) == [
        '# R=1 crossover=7 ties=6 ring_never_loses=false'
    ]


def test_compare_one_pair_traveling(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'one-pair-traveling',
                                 '--n-max', '20', '--radius', '2'])
    assert result.exit_code == 0, result.output
    assert _summaries(result.output) == [
        '# R=2 crossover=3 ties=2 ring_never_loses=true'
    ]


def test_compare_no_crossover_in_range(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'asymptotic', '--n-max', '5'])
    assert result.exit_code == 0
    assert 'crossover=none in range' in result.output


def test_compare_heuristic_ad(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'heuristic-ad', '--n-max', '12',
                                 '--e-distillable', '0.4'])
    assert result.exit_code == 0, result.output
    assert 'ring_never_loses=true' in result.output


def test_compare_json(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'one-pair-per-wirelength',
                                 '--n-max', '8', '--radius', '0.5', '--radius', '1',
                                 '--format', 'json'])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert set(payload) == {'meta', 'records', 'summary'}
    assert payload['meta']['regime'] == 'one-pair-per-wirelength'
    assert payload['meta']['radii'] == [0.5, 1.0]
    assert 'workers' not in payload['meta']
    assert len(payload['records']) == 2 * 7
    assert [s['R'] for s in payload['summary']] == [0.5, 1.0]


def test_compare_is_byte_identical(runner):
    args = ['compare', '--regime', 'one-pair-traveling', '--n-max', '30',
            '--radius', '0.1', '--radius', '5', '--workers', '4']
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args + ['--workers', '1'])
    assert first.exit_code == 0
    assert first.output == second.output


def test_sweep_default_radii(runner):
    result = runner.invoke(cli, ['sweep', '--regime', 'asymptotic', '--n-max', '8'])
    assert result.exit_code == 0, result.output
    summaries = _summaries(result.output)
    assert [s.split()[1] for s in summaries] == [
        'R=0.1', 'R=0.5', 'R=1', 'R=2', 'R=5', 'R=10'
    ]


def test_sweep_writes_file(runner, tmp_path):
    target = tmp_path / 'out' / 'sweep.csv'
    result = runner.invoke(cli, ['sweep', '--regime', 'asymptotic', '--n-max', '8',
                                 '--radius', '1', '--output', str(target)])
    assert result.exit_code == 0, result.output
    assert target.read_text(encoding='ascii').startswith('N,R,e_avg_star,e_avg_ring,winner\n')


def test_unwritable_output(runner, tmp_path):
    blocker = tmp_path / 'file.txt'
    blocker.write_text('x')
    result = runner.invoke(cli, ['compare', '--regime', 'asymptotic', '--n-max', '4',
                                 '--output', str(blocker / 'out.csv')])
    assert result.exit_code == 1


@pytest.mark.parametrize('args', [
    ['--n-min', '5', '--n-max', '3'],
    ['--n-min', '1'],
    ['--radius', '0'],
])
def test_invalid_ranges_are_usage_errors(runner, args):
    result = runner.invoke(cli, ['compare', '--regime', 'asymptotic'] + args)
    assert result.exit_code == 2


def test_invalid_heuristic_params(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'heuristic',
                                 '--e-distillable', '0.9', '--delta-success', '0.5'])
    assert result.exit_code == 2


def test_unknown_regime(runner):
    result = runner.invoke(cli, ['compare', '--regime', 'teleport'])
    assert result.exit_code == 2


# ─── figure ──────────────────────────────────────────────────────────────────

@pytest.mark.parametrize('radius', ['0.1', '1', '10'])
def test_fig2_and_fig3_identical(runner, radius):
    fig2 = runner.invoke(cli, ['figure', 'fig2', '--radius', radius])
    fig3 = runner.invoke(cli, ['figure', 'fig3', '--radius', radius])
    assert fig2.exit_code == 0 and fig3.exit_code == 0
    rows2, rows3 = _rows(fig2.output), _rows(fig3.output)
    assert len(rows2) == len(rows3) == 49
    for a, b in zip(rows2, rows3):
        assert a['N'] == b['N']
        assert float(a['e_avg_ring']) >= float(a['e_avg_star']) * (1 - 1e-9)
    assert fig2.output == fig3.output


def test_classical_wire_figure(runner):
    result = runner.invoke(cli, ['figure', 'classical-wire', '--n-max', '12'])
    assert result.exit_code == 0
    winners = {int(r['N']): r['winner'] for r in _rows(result.output)}
    assert winners[2] == 'star'
    assert winners[6] == 'tie'
    assert winners[12] == 'ring'


def test_heuristic_interp_figure(runner):
    result = runner.invoke(cli, ['figure', 'heuristic-interp', '--n-max', '40'])
    assert result.exit_code == 0, result.output
    rows = _rows(result.output)
    assert [r['k'] for r in rows] == ['1', '2', '3', '4', '5', '6']
    assert rows[-1]['crossover'] == '7'


def test_figure_to_file(runner, tmp_path):
    target = tmp_path / 'asym.csv'
    result = runner.invoke(cli, ['figure', 'asymptotic', '--n-max', '10',
                                 '--output', str(target)])
    assert result.exit_code == 0
    assert target.read_text().splitlines()[0] == 'N,e_avg_ring,e_avg_star'


def test_unknown_figure(runner):
    assert runner.invoke(cli, ['figure', 'fig9']).exit_code == 2


def test_figure_bad_radius(runner):
    assert runner.invoke(cli, ['figure', 'fig2', '--radius', '0']).exit_code == 2


# ─── verify ──────────────────────────────────────────────────────────────────

def test_verify_passes_and_is_repeatable(runner):
    first = runner.invoke(cli, ['verify', '--trials', '20', '--seed', '3'])
    second = runner.invoke(cli, ['verify', '--trials', '20', '--seed', '3'])
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    assert first.output.splitlines()[0] == 'trials=20 seed=3'
    assert first.output.rstrip().endswith('all checks passed')


def test_verify_failure_exit_code(runner):
    result = runner.invoke(cli, ['verify', '--trials', '5', '--tolerance', '0'])
    assert result.exit_code == 1


def test_verify_rejects_zero_trials(runner):
    assert runner.invoke(cli, ['verify', '--trials', '0']).exit_code == 2


def test_json_independent_of_workers(runner):
    args = ['compare', '--regime', 'asymptotic', '--n-max', '12', '--format', 'json']
    one = runner.invoke(cli, args + ['--workers', '1'])
    many = runner.invoke(cli, args + ['--workers', '7'])
    assert one.exit_code == 0 and many.exit_code == 0
    assert one.output == many.output
