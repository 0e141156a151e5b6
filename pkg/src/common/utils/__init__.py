from .hash_helpers import df_hash, file_hash, table_to_csv_bytes
from .seeding import derive_seed

__all__ = ['df_hash', 'file_hash', 'table_to_csv_bytes', 'derive_seed']
