"""Schrodinger potentials built from the Heun equation."""

import json

from ._heunpot import (
    Family,
    HeunParams,
    HeunpotError,
    build_profile,
    energy_constant,
    heun_invariant,
    heun_invariant_quartic,
    heun_local,
    heun_oracle,
    heun_series_coeffs,
    invariant_coeffs,
    run_cli,
    schrodinger_invariant,
    schwarzian_closed,
    schwarzian_numeric,
    verify_json,
    wavefunction,
)

__version__ = "0.1.0"


def verify(seed=20240917, tol=None, corrupt_table=False):
    """Runs every verification suite and returns the report as a dict."""
    return json.loads(verify_json(seed, tol, corrupt_table))


__all__ = [
    "Family",
    "HeunParams",
    "HeunpotError",
    "build_profile",
    "energy_constant",
    "heun_invariant",
    "heun_invariant_quartic",
    "heun_local",
    "heun_oracle",
    "heun_series_coeffs",
    "invariant_coeffs",
    "run_cli",
    "schrodinger_invariant",
    "schwarzian_closed",
    "schwarzian_numeric",
    "verify",
    "verify_json",
    "wavefunction",
]
