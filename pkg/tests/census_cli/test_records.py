import json
import math

import numpy as np
import pandas as pd

from census_cli.records import SCHEMA_VERSION, ExperimentRecord, _jsonable


def make_record(**overrides):
    fields = dict(
        command='random-graph',
        params={'n_grid': [32, 64], 'k': 5},
        seed=3,
        version='0.1.0',
        table=pd.DataFrame({'n': [32, 64], 'median_ratio': [0.6, np.nan]}),
        summary={'median_ratio_spread': math.inf, 'ok': np.bool_(True)},
    )
    fields.update(overrides)
    return ExperimentRecord(**fields)


def test_jsonable_handles_numpy_and_non_finite():
    assert _jsonable({'a': np.int64(3), 'b': np.float64(-math.inf), 'c': [np.nan, 1.5]}) == {
        'a': 3, 'b': '-inf', 'c': ['nan', 1.5],
    }


def test_write_uses_command_stem(tmp_path):
    csv_path, json_path = make_record().write(tmp_path / 'out')
    assert csv_path.name == 'random_graph.csv'
    assert json_path.name == 'random_graph.json'
    assert csv_path.read_text(encoding='utf-8') == "n,median_ratio\n32,0.6\n64,\n"
    sidecar = json.loads(json_path.read_text(encoding='utf-8'))
    assert sidecar['schema_version'] == SCHEMA_VERSION
    assert sidecar['summary'] == {'median_ratio_spread': 'inf', 'ok': True}
    assert sidecar['params'] == {'n_grid': [32, 64], 'k': 5}


def test_payload_hash_ignores_duration():
    fast = make_record(duration_ms=1.0).sidecar()
    slow = make_record(duration_ms=900.0).sidecar()
    assert fast['payload_md5'] == slow['payload_md5']
    assert fast['duration_ms'] != slow['duration_ms']
