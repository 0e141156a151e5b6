import hashlib
from pathlib import Path

import pandas as pd

CSV_FLOAT_FORMAT = "%.12g"


def table_to_csv_bytes(df: pd.DataFrame) -> bytes:
    """Serialize a result table exactly as the CLI writes it."""
    return df.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n").encode("utf-8")


def df_hash(df: pd.DataFrame) -> str:
    """Return MD5 hash of the DataFrame's CSV serialization."""
    return hashlib.md5(table_to_csv_bytes(df)).hexdigest()


def file_hash(path: Path) -> str:
    """Return MD5 hash of file bytes."""
    return hashlib.md5(Path(path).read_bytes()).hexdigest()
