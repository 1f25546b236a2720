from ._gracetree import (
    parse,
    size,
    canonical_code,
    classify,
    label,
    verify_json,
    replay,
    oracle_label,
    enumerate_class,
    run_cli,
)

__all__ = [
    "parse",
    "size",
    "canonical_code",
    "classify",
    "label",
    "verify_json",
    "replay",
    "oracle_label",
    "enumerate_class",
    "run_cli",
]
