import math
import os

import pandas as pd
import pytest

from common.errors import DomainError
from cover_family import ConstraintMode
from schreier import (
    LemmaConstants, SCAN_COLUMNS, SUMMARY_COLUMNS, diameter_growth_scan,
    expander_diameter_experiment, fitted_growth_constant, lemma_constants,
    lemma_diameter_bound, random_regular_graph, vertex_degrees,
)


class TestWordLengthDiameterBound:

    def test_examples(self):
        assert lemma_diameter_bound(LemmaConstants(c1=2, c2=3), 6) == 20
        assert lemma_diameter_bound(LemmaConstants(c1=0, c2=5), 0) == 0

    def test_composed_with_length_bound(self):
        consts = lemma_constants(diam_m=1.0, loop_lengths=[0.5, 1.0])
        assert (consts.c1, consts.c2) == (2.0, 2.0)
        bound = lemma_diameter_bound(consts, 3 * (1 + math.log2(5)))
        assert bound == pytest.approx(21.93, abs=0.01)

    def test_validation(self):
        with pytest.raises(DomainError):
            LemmaConstants(c1=-1, c2=1)
        with pytest.raises(DomainError):
            LemmaConstants(c1=0, c2=0)
        with pytest.raises(DomainError):
            lemma_constants(1.0, [])


def test_random_regular_graph_degrees():
    graph = random_regular_graph(100, 5, seed=3)
    assert graph.label_count == 5
    assert (vertex_degrees(graph) == 10).all()


def test_random_regular_graph_is_seeded():
    assert random_regular_graph(64, 5, seed=1) == random_regular_graph(64, 5, seed=1)
    assert random_regular_graph(64, 5, seed=1) != random_regular_graph(64, 5, seed=2)


def test_growth_scan_respects_representative_bound():
    scan = diameter_growth_scan([16, 32, 64], samples_per_r=2, seed=1)
    table = scan.table
    assert list(table.columns) == SCAN_COLUMNS
    assert len(table) == 6
    assert (table['diameter'] <= table['rep_bound']).all()
    assert (table['ecc_zero'] <= table['max_rep_length']).all()
    assert table['exact'].all()
    assert scan.fitted_d == pytest.approx(table['ratio'].max())
    assert scan.fitted_d_up_to(16) == pytest.approx(table.loc[table['r'] == 16, 'ratio'].max())


def test_growth_scan_rows_depend_only_on_seed_and_degree():
    small = diameter_growth_scan([32], samples_per_r=3, seed=5).table
    large = diameter_growth_scan([16, 32], samples_per_r=3, seed=5).table
    pd.testing.assert_frame_equal(
        small.reset_index(drop=True),
        large[large['r'] == 32].reset_index(drop=True),
    )


def test_growth_scan_even_only_mode():
    scan = diameter_growth_scan([16, 32], samples_per_r=2, seed=2, mode=ConstraintMode.EVEN_ONLY)
    assert (scan.table['diameter'] <= scan.table['rep_bound']).all()


def test_fitted_growth_constant_empty():
    empty = pd.DataFrame(columns=SCAN_COLUMNS)
    assert math.isnan(fitted_growth_constant(empty))


def test_expander_experiment_small_grid():
    result = expander_diameter_experiment([64, 128], k=5, trials=3, seed=9)
    summary = result.summary
    assert list(summary.columns) == SUMMARY_COLUMNS
    assert summary['n'].tolist() == [64, 128]
    assert (summary['trials'] == 3).all()
    connected = result.trials[result.trials['connected']]
    assert (connected['diameter'] >= connected['moore_bound']).all()
    assert result.median_ratio_spread >= 1.0


def test_expander_experiment_independent_of_workers():
    serial = expander_diameter_experiment([32, 64], k=5, trials=2, seed=4)
    parallel = expander_diameter_experiment([32, 64], k=5, trials=2, seed=4, workers=2)
    pd.testing.assert_frame_equal(serial.trials, parallel.trials)
    pd.testing.assert_frame_equal(serial.summary, parallel.summary)


def test_expander_experiment_zero_trials():
    result = expander_diameter_experiment([256], k=5, trials=0, seed=1)
    assert result.trials.empty
    assert result.summary.empty


def test_expander_experiment_validation():
    with pytest.raises(DomainError):
        expander_diameter_experiment([64], k=4, trials=1, seed=1)
    with pytest.raises(DomainError):
        expander_diameter_experiment([64], k=5, trials=-1, seed=1)


@pytest.mark.slow
def test_family_diameters_grow_logarithmically_up_to_4096():
    scan = diameter_growth_scan([2 ** e for e in range(4, 13)], 10, seed=1)
    assert len(scan.table) == 90
    assert (scan.table['diameter'] <= 2 * (scan.table['max_rep_length'] + 1)).all()
    sub_grid = scan.fitted_d_up_to(2 ** 8)
    assert sub_grid > 0
    assert sub_grid <= scan.fitted_d <= 2 * sub_grid


@pytest.mark.slow
def test_random_covers_have_logarithmic_diameter():
    n_grid = [2 ** e for e in range(8, 14)]
    experiment = expander_diameter_experiment(n_grid, 5, 20, seed=1, workers=os.cpu_count() or 1)
    summary = experiment.summary
    assert summary['n'].tolist() == n_grid
    assert (summary['connected'] >= 19).all()
    assert (summary['diameter_min'] >= summary['moore_bound']).all()
    assert experiment.median_ratio_spread < 2.0
