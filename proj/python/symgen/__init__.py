"""Generating series of Hodge-type invariants of symmetric products."""

from ._symgen import (
    ConsistencyError,
    InputError,
    LaurentPoly,
    adams_from_sigma,
    alt_power_brute,
    character_table,
    configuration_series,
    hodge_poly,
    lambda_series,
    parse_poly,
    run_cli,
    schur_multiplicity,
    sigma_series,
    signature_series,
    sym_power_brute,
    symmetric_series,
)

__all__ = [
    "ConsistencyError",
    "InputError",
    "LaurentPoly",
    "adams_from_sigma",
    "alt_power_brute",
    "character_table",
    "configuration_series",
    "hodge_poly",
    "lambda_series",
    "parse_poly",
    "run_cli",
    "schur_multiplicity",
    "sigma_series",
    "signature_series",
    "sym_power_brute",
    "symmetric_series",
]
