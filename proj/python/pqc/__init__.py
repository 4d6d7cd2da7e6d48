"""p-adic quantum derivative df = [M_f, S] on truncated character bases."""

import json

import numpy as np

from ._pqc import (
    SpecError,
    __version__,
    besov_seminorm,
    bmo_oscillation_sequence,
    bmo_seminorm,
    check_names,
    derivative_matrix,
    dual,
    exact_rank,
    fourier_forward,
    fourier_inverse,
    legendre,
    norm,
    operator_norm_matrix_free,
    sgn,
    singular_values,
    sobolev_half_norm,
)
from ._pqc import load_function as _load_function
from ._pqc import run_checks_json as _run_checks_json


def load_function(source, p=None, level=None):
    """Parse a function spec; returns a dict with values and spectrum arrays."""
    p, level, values, spectrum, description = _load_function(source, p, level)
    return {"p": p, "level": level, "values": values, "spectrum": spectrum, "description": description}


def verify(checks="all", **config):
    """Run verification checks and return the parsed JSON report."""
    if checks == "all":
        names = list(check_names())
    elif isinstance(checks, str):
        names = [checks]
    else:
        names = list(checks)
    if "max_level" in config:
        config["max_level"] = {str(k): v for k, v in config["max_level"].items()}
    return json.loads(_run_checks_json(names, json.dumps(config) if config else ""))


def character_spectrum(alpha, p, level):
    """Spectrum of chi_alpha at the given level."""
    bins = np.zeros(p**level, dtype=complex)
    bins[dual(p, level).index(alpha)] = 1.0
    return bins


__all__ = [
    "SpecError",
    "__version__",
    "besov_seminorm",
    "bmo_oscillation_sequence",
    "bmo_seminorm",
    "character_spectrum",
    "check_names",
    "derivative_matrix",
    "dual",
    "exact_rank",
    "fourier_forward",
    "fourier_inverse",
    "legendre",
    "load_function",
    "norm",
    "operator_norm_matrix_free",
    "sgn",
    "singular_values",
    "sobolev_half_norm",
    "verify",
]
