from .manifest import RunManifest
from .registry import DATASETS, LoadedDataset, data_dir, resolve_dataset
from .runio import (
    CURVES_SCHEMA,
    replay_record,
    write_curves_csv,
    write_report_specs,
    write_tradeoff_csv,
)

__all__ = [
    "CURVES_SCHEMA",
    "DATASETS",
    "LoadedDataset",
    "RunManifest",
    "data_dir",
    "replay_record",
    "resolve_dataset",
    "write_curves_csv",
    "write_report_specs",
    "write_tradeoff_csv",
]
