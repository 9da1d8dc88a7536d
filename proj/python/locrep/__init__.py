"""Checks whether finite sets of rational functions locally represent Q."""

import json

from . import _locrep
from ._locrep import (
    CapExceeded,
    DomainError,
    ParseError,
    RatFunc,
    catalog_names,
    chebyshev,
    galois_closure_genus,
    is_kp_value,
    redei,
)

PASS, FAIL, INCONCLUSIVE, USAGE = 0, 1, 2, 3


def _job(run, functions=(), **options):
    return json.loads(run(list(functions), **options))


def check(functions=(), **options):
    """Prime scan over t0 samples; same report as `locrep check --format json`."""
    return _job(_locrep.check, functions, **options)


def minimal(functions=(), **options):
    return _job(_locrep.minimal, functions, **options)


def branch(functions=(), **options):
    return _job(_locrep.branch, functions, **options)


def monodromy(functions=(), **options):
    return _job(_locrep.monodromy, functions, **options)


def verify_entry(name, **options):
    return _job(_locrep.catalog, (), catalog=name, **options)


def padic(f, t0, p):
    return json.loads(_locrep.padic(f, str(t0), p))


def group(catalog="", model=None, cap=None):
    spec = "" if model is None else json.dumps(model)
    return json.loads(_locrep.group(catalog, spec, cap))


def exit_code(report):
    """Exit code the command line tool gives for this report."""
    return _locrep.exit_code(json.dumps(report))


__all__ = [
    "CapExceeded", "DomainError", "ParseError", "RatFunc", "catalog_names", "chebyshev",
    "galois_closure_genus", "is_kp_value", "redei", "check", "minimal", "branch", "monodromy",
    "verify_entry", "padic", "group", "exit_code", "PASS", "FAIL", "INCONCLUSIVE", "USAGE",
]
