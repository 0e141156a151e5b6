import argparse
import json
import math
from fractions import Fraction

import pandas as pd
import pytest

from census_cli.main import EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, build_parser, int_grid, main

SIDECAR_KEYS = {'command', 'params', 'seed', 'version', 'duration_ms', 'schema_version',
                'summary', 'payload_md5'}


def read_outputs(output_dir, command):
    stem = command.replace('-', '_')
    table = pd.read_csv(output_dir / f"{stem}.csv")
    sidecar = json.loads((output_dir / f"{stem}.json").read_text(encoding='utf-8'))
    return table, sidecar


class TestGrid:

    def test_power_range(self):
        assert int_grid("2^4..2^6") == [16, 32, 64]

    def test_comma_list(self):
        assert int_grid("16, 32,2^7..2^7") == [16, 32, 128]

    @pytest.mark.parametrize("text", ["", "x", "2^6..2^4", "0", "-4"])
    def test_rejected(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            int_grid(text)


class TestUsageErrors:

    def test_missing_subcommand(self, run_cli):
        with pytest.raises(SystemExit) as excinfo:
            run_cli()
        assert excinfo.value.code == EXIT_USAGE

    def test_unknown_flag(self, run_cli):
        with pytest.raises(SystemExit) as excinfo:
            run_cli('census', '--max-index', '3', '--bogus')
        assert excinfo.value.code == EXIT_USAGE

    def test_seed_required(self, run_cli):
        with pytest.raises(SystemExit) as excinfo:
            run_cli('diameter-scan', '--r-grid', '16', '--samples', '1')
        assert excinfo.value.code == EXIT_USAGE

    @pytest.mark.parametrize("args", [
        ('family', '--r', '4'),
        ('family', '--r', '8', '--mode', 'odd-only'),
        ('random-graph', '--n-grid', '64', '--k', '4', '--trials', '1', '--seed', '1'),
        ('bounds', '--n', '2', '--d', '1'),
        ('census', '--max-index', '4', '--cutoff', '3'),
        ('diameter-scan', '--r-grid', '4,16', '--samples', '1', '--seed', '1'),
    ])
    def test_out_of_range_parameters(self, run_cli, args):
        status, output_dir = run_cli(*args)
        assert status == EXIT_USAGE
        assert not output_dir.exists()

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(['--version'])
        assert excinfo.value.code == EXIT_OK
        assert 'census' in capsys.readouterr().out


def test_help_lists_csv_columns():
    parser = build_parser()
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    assert 'transitive_pairs' in subparsers.choices['census'].format_help()
    assert 'median_ratio' in subparsers.choices['random-graph'].format_help()


def test_census_command(run_cli):
    status, output_dir = run_cli('census', '--max-index', '5')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'census')
    assert table['r'].tolist() == [1, 2, 3, 4, 5]
    assert table['subgroups'].tolist() == [1, 3, 13, 71, 461]
    assert table['classes'].tolist() == [1, 3, 13, 71, 461]
    assert table['transitive_pairs'].tolist() == [1, 3, 26, 426, 11064]
    assert table['matches'].all()
    assert set(sidecar) == SIDECAR_KEYS
    assert sidecar['params'] == {'max_index': 5, 'cutoff': 7}
    assert sidecar['seed'] is None


def test_family_verify_reps(run_cli, capsys):
    status, output_dir = run_cli('family', '--r', '64', '--verify-reps', '--seed', '3', '--budget', '5')
    assert status == EXIT_OK
    assert 'all representatives valid' in capsys.readouterr().out
    table, sidecar = read_outputs(output_dir, 'family')
    assert len(table) == 64
    assert (table['landing_failures'] == 0).all()
    assert sidecar['summary']['valid'] is True
    assert sidecar['summary']['members_checked'] == 5
    assert sidecar['summary']['max_length_bound'] == pytest.approx(3 * (1 + math.log2(31)))


def test_family_listing_without_seed_takes_prefix(run_cli):
    status, output_dir = run_cli('family', '--r', '10', '--budget', '4')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'family')
    assert len(table) == 4
    assert table['satisfies_constraints'].all()
    assert sidecar['summary']['selection'] == 'prefix'
    assert sidecar['summary']['family_size'] == 720


def test_bounds_command(run_cli):
    status, output_dir = run_cli('bounds', '--n', '3', '--d', '10', '--a', '1', '--b', '1')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'bounds')
    summary = sidecar['summary']
    assert summary['lnln_lower'] == pytest.approx(10.0, rel=1e-12)
    assert summary['ln_upper'] == pytest.approx(10 * math.exp(50), rel=1e-12)
    assert summary['constants_are_conventions'] is True
    assert summary['chain_all_hold'] is True
    values = dict(zip(table['quantity'], table['value']))
    assert values['lnln_upper'] == pytest.approx(math.log(10) + 50, rel=1e-11)
    assert 'chain_manifolds_c4' in values


def test_bounds_huge_diameter_reports_infinity(run_cli):
    status, output_dir = run_cli('bounds', '--n', '3', '--d', '1000')
    assert status == EXIT_OK
    _, sidecar = read_outputs(output_dir, 'bounds')
    assert sidecar['summary']['ln_upper'] == 'inf'
    assert math.isfinite(sidecar['summary']['lnln_upper'])


def test_random_graph_command(run_cli):
    status, output_dir = run_cli('random-graph', '--n-grid', '32,64', '--k', '5',
                                 '--trials', '2', '--seed', '1')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'random-graph')
    assert table['n'].tolist() == [32, 64]
    assert (table['diameter_min'] >= table['moore_bound']).all()
    assert sidecar['seed'] == 1


def test_random_graph_zero_trials(run_cli):
    status, output_dir = run_cli('random-graph', '--n-grid', '64', '--trials', '0', '--seed', '1')
    assert status == EXIT_OK
    table, _ = read_outputs(output_dir, 'random-graph')
    assert table.empty


def test_nerve_command(run_cli):
    status, output_dir = run_cli('nerve', '--points', '400', '--radius', '1', '--seed', '2',
                                 '--sep', '0.2')
    assert status == EXIT_OK
    table, _ = read_outputs(output_dir, 'nerve')
    row = table.iloc[0]
    assert row['min_separation'] >= 0.2
    assert row['covering_radius'] < 0.2
    assert row['max_degree'] <= row['degree_bound']
    assert row['triangles'] <= row['triangle_bound']


@pytest.mark.parametrize("args", [
    ('diameter-scan', '--r-grid', '16,32', '--samples', '2', '--seed', '7'),
    ('random-graph', '--n-grid', '32,64', '--trials', '2', '--seed', '7'),
    ('nerve', '--points', '300', '--radius', '1', '--seed', '7', '--sep', '0.25'),
    ('nerve', '--points', '300', '--radius', '1', '--seed', '7', '--sep', '0.25', '--euclidean'),
    ('family', '--r', '40', '--seed', '7', '--budget', '5'),
    ('bounds', '--n', '4', '--d', '3'),
])
def test_outputs_are_byte_identical_across_runs(run_cli, args):
    stem = args[0].replace('-', '_')
    first_status, first = run_cli(*args)
    second_status, second = run_cli(*args)
    assert first_status == second_status == EXIT_OK
    assert (first / f"{stem}.csv").read_bytes() == (second / f"{stem}.csv").read_bytes()
    first_meta = json.loads((first / f"{stem}.json").read_text(encoding='utf-8'))
    second_meta = json.loads((second / f"{stem}.json").read_text(encoding='utf-8'))
    assert first_meta['payload_md5'] == second_meta['payload_md5']


def test_invariant_violation_exits_two(run_cli, monkeypatch):
    from census_cli import commands
    from common.errors import InvariantViolation

    def broken(args, config):
        raise InvariantViolation("test-check", "forced")

    monkeypatch.setitem(commands.COMMANDS, 'bounds', broken)
    status, _ = run_cli('bounds', '--n', '3', '--d', '1')
    assert status == EXIT_INVARIANT


def test_unexpected_error_exits_two(run_cli, monkeypatch):
    from census_cli import commands

    def crash(args, config):
        raise RuntimeError("boom")

    monkeypatch.setitem(commands.COMMANDS, 'bounds', crash)
    status, _ = run_cli('bounds', '--n', '3', '--d', '1')
    assert status == EXIT_INVARIANT


def test_family_at_a_degree_with_thousands_of_digits(run_cli):
    status, output_dir = run_cli('family', '--r', '4096', '--verify-reps', '--seed', '1', '--budget', '2')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'family')
    summary = sidecar['summary']
    assert len(table) == 4096
    assert summary['valid'] is True
    assert summary['ln_family_size'] == pytest.approx(math.lgamma(2050), rel=1e-12)
    assert summary['family_size'] == math.factorial(2049)


def test_family_reports_the_lower_bound_count(run_cli):
    status, output_dir = run_cli('family', '--r', '64', '--k', '100', '--seed', '1', '--budget', '3',
                                 '--dominance-grid', '44,46')
    assert status == EXIT_OK
    _, sidecar = read_outputs(output_dir, 'family')
    summary = sidecar['summary']
    expected = math.lgamma(34) - math.log(6400)
    assert summary['k'] == 100
    assert summary['ln_lower_bound'] == pytest.approx(expected, rel=1e-12)
    assert summary['ln_lower_bound_minus_r'] == pytest.approx(expected - 64, rel=1e-12)
    assert summary['lower_bound_exact'] == str(Fraction(math.factorial(33), 6400))
    (r_low, margin_low), (r_high, margin_high) = summary['dominance']
    assert (r_low, r_high) == (44, 46)
    assert margin_low < 0 < margin_high


def test_family_digit_limit_comes_from_config(run_cli, tmp_path):
    config_path = tmp_path / 'census.yaml'
    config_path.write_text("family:\n  exact_digit_limit: 10\n", encoding='utf-8')
    status, output_dir = run_cli('--config', str(config_path), 'family', '--r', '64',
                                 '--seed', '1', '--budget', '2')
    assert status == EXIT_OK
    _, sidecar = read_outputs(output_dir, 'family')
    assert sidecar['summary']['family_size'] is None
    assert sidecar['summary']['lower_bound_exact'] is None
    assert sidecar['summary']['ln_family_size'] == pytest.approx(math.lgamma(34), rel=1e-12)


def test_family_odd_degree_has_one_row_per_coset(run_cli):
    status, output_dir = run_cli('family', '--r', '9', '--verify-reps', '--seed', '1', '--budget', '2')
    assert status == EXIT_OK
    table, _ = read_outputs(output_dir, 'family')
    assert table['coset'].tolist() == list(range(9))
    assert table.loc[table['coset'] == 0, 'word'].tolist() == ['e']


def test_bounds_with_growth_constant_reports_family_covers(run_cli):
    status, output_dir = run_cli('bounds', '--n', '3', '--d', '10', '--growth-constant', '2')
    assert status == EXIT_OK
    table, sidecar = read_outputs(output_dir, 'bounds')
    values = dict(zip(table['quantity'], table['value']))
    assert values['family_degree'] == 148
    expected = math.lgamma(76) - math.log(148 * 100)
    assert values['ln_family_covers'] == pytest.approx(expected, rel=1e-9)
    assert sidecar['summary']['ln_family_covers'] == pytest.approx(expected, rel=1e-12)


def test_numeric_settings_come_from_config(run_cli, tmp_path, monkeypatch):
    from census_cli import commands

    seen = {}
    real_chain, real_net = commands.upper_bound_chain, commands.greedy_net

    def chain_spy(consts, tol):
        seen['quad_tol'] = tol
        return real_chain(consts, tol)

    def net_spy(cloud, sep, metric, clamp_warn):
        seen['clamp_warn'] = clamp_warn
        return real_net(cloud, sep, metric, clamp_warn)

    monkeypatch.setattr(commands, 'upper_bound_chain', chain_spy)
    monkeypatch.setattr(commands, 'greedy_net', net_spy)
    config_path = tmp_path / 'census.yaml'
    config_path.write_text("hyperbolic:\n  quad_tol: 1.0e-9\n  clamp_warn: 1.0e-3\n", encoding='utf-8')
    assert run_cli('--config', str(config_path), 'bounds', '--n', '3', '--d', '2')[0] == EXIT_OK
    assert run_cli('--config', str(config_path), 'nerve', '--points', '50', '--radius', '1',
                   '--seed', '1', '--sep', '0.3')[0] == EXIT_OK
    assert seen == {'quad_tol': 1e-9, 'clamp_warn': 1e-3}


def test_internal_value_error_exits_two(run_cli, monkeypatch):
    from census_cli import commands

    def crash(args, config):
        raise ValueError("Exceeds the limit for integer string conversion")

    monkeypatch.setitem(commands.COMMANDS, 'bounds', crash)
    status, output_dir = run_cli('bounds', '--n', '3', '--d', '1')
    assert status == EXIT_INVARIANT
    assert not output_dir.exists()
