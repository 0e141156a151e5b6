"""Experiment records: a CSV result table plus a JSON metadata sidecar."""

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np
import pandas as pd

from common.utils import df_hash, table_to_csv_bytes

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _jsonable(value: Any) -> Any:
    """Plain JSON types; non-finite floats become the strings 'inf', '-inf', 'nan'."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isfinite(value):
            return value
        return 'nan' if math.isnan(value) else ('inf' if value > 0 else '-inf')
    if isinstance(value, Path):
        return str(value)
    return value


@dataclass
class ExperimentRecord:
    """One subcommand run. Only ``table`` has to be reproducible byte for byte."""
    command: str
    params: Dict[str, Any]
    seed: Optional[int]
    version: str
    table: pd.DataFrame
    summary: Dict[str, Any] = field(default_factory=dict)
    duration_ms: float = 0.0

    def csv_bytes(self) -> bytes:
        return table_to_csv_bytes(self.table)

    def sidecar(self) -> Dict[str, Any]:
        return _jsonable({
            'command': self.command,
            'params': self.params,
            'seed': self.seed,
            'version': self.version,
            'duration_ms': round(self.duration_ms, 3),
            'schema_version': SCHEMA_VERSION,
            'summary': self.summary,
            'payload_md5': df_hash(self.table),
        })

    def write(self, output_dir: Path) -> Tuple[Path, Path]:
        """Write ``<command>.csv`` and ``<command>.json`` into ``output_dir``."""
        output_dir = Path(output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        stem = self.command.replace('-', '_')
        csv_path = output_dir / f"{stem}.csv"
        json_path = output_dir / f"{stem}.json"
        csv_path.write_bytes(self.csv_bytes())
        json_path.write_text(json.dumps(self.sidecar(), indent=2, sort_keys=True) + "\n",
                             encoding='utf-8')
        logger.info(f"Wrote {len(self.table)} rows to {csv_path}")
        return csv_path, json_path
