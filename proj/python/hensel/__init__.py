"""Exact Hensel lifting over p-adic and t-adic fields."""

import json

from ._core import (
    SCHEMA_VERSION,
    Element,
    Field,
    HenselError,
    Truncated,
    discriminant,
    hensel_lift,
    hensel_newton,
    herve_lift,
    newton_solve,
    refine_root,
    run_batch_json,
    run_json,
    trace_determinant,
)


def run(job, command=None):
    """Runs a CLI job (dict or JSON text); returns (document, exit code)."""
    text = job if isinstance(job, str) else json.dumps(job)
    out, code = run_json(text, command)
    return json.loads(out), code


def run_batch(jobs, threads=1, command=None):
    """Runs a list of jobs; returns (batch document, largest exit code)."""
    out, code = run_batch_json(json.dumps(jobs), threads, command)
    return json.loads(out), code


__all__ = [
    "SCHEMA_VERSION",
    "Element",
    "Field",
    "HenselError",
    "Truncated",
    "discriminant",
    "hensel_lift",
    "hensel_newton",
    "herve_lift",
    "newton_solve",
    "refine_root",
    "run",
    "run_batch",
    "run_batch_json",
    "run_json",
    "trace_determinant",
]
