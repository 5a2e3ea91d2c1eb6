"""Hilbert functions and Lefschetz properties of artinian ideals.

Ideal specifications are dicts (or JSON strings) of the form accepted by the
``wlpkit`` command-line tool; every function returns the same report dict the
tool prints with ``--output json``.
"""

import json

from . import _core
from ._core import DualPathMismatch, GenericityFailure, NotArtinian, SpecParseError

__version__ = _core.__version__

__all__ = [
    "DualPathMismatch",
    "GenericityFailure",
    "NotArtinian",
    "SpecParseError",
    "apolar",
    "hilbert",
    "oracle_table",
    "probe",
    "slp",
    "verify_hss",
    "wlp",
]


def _spec_text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def hilbert(spec, **config):
    return json.loads(_core.hilbert(_spec_text(spec), **config))


def wlp(spec, **config):
    return json.loads(_core.wlp(_spec_text(spec), **config))


def slp(spec, max_power=None, **config):
    return json.loads(_core.slp(_spec_text(spec), max_power=max_power, **config))


def verify_hss(r_min=2, r_max=13, **config):
    return json.loads(_core.verify_hss(r_min, r_max, **config))


def apolar(r, **config):
    return json.loads(_core.apolar(r, **config))


def probe(r, s, exponents, **config):
    if isinstance(exponents, int):
        exponents = [exponents]
    return json.loads(_core.probe(r, s, list(exponents), **config))


def oracle_table(name, r):
    return json.loads(_core.oracle_table(name, r))
