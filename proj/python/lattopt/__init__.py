"""Exact lattice-point counting and integer polynomial optimization.

Thin pythonic wrapper over the compiled ``_lattopt`` module: instances and
results travel as canonical JSON; this layer parses the documents into dicts
and converts exact big-integer strings back into python ints.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import _lattopt
from _lattopt import (  # noqa: F401  (re-exported)
    BudgetExceeded,
    DegenerateError,
    InfeasibleError,
    ParseError,
    UnboundedError,
)

__all__ = [
    "ParseError",
    "InfeasibleError",
    "UnboundedError",
    "DegenerateError",
    "BudgetExceeded",
    "canonical",
    "digest",
    "generate",
    "count",
    "bounds",
    "optimize",
    "fptas",
    "oracle",
    "mixed",
    "as_fraction",
]

_INT_KEYS = {
    "count",
    "power_sum",
    "ceil_lower",
    "floor_upper",
    "optimum",
    "best_upper",
    "best_lower",
    "certified_value",
    "raw_value",
    "scale",
    "n",
    "shift_lower_bound",
    "lower_bound_used",
    "upper_bound_used",
}


def _revive(obj: Any) -> Any:
    """Turn stringified big integers back into ints, recursively."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if key in _INT_KEYS and isinstance(value, str):
                out[key] = int(value)
            elif key == "argopt" or key == "certified_point":
                out[key] = [int(v) if isinstance(v, str) else v for v in value]
            else:
                out[key] = _revive(value)
        return out
    if isinstance(obj, list):
        return [_revive(v) for v in obj]
    return obj


def _doc(text: str) -> dict:
    return _revive(json.loads(text))


def as_fraction(value: str | int) -> Fraction:
    """Exact rational from the "p/q" strings used in result documents."""
    return Fraction(str(value))


def _instance_text(instance: str | dict) -> str:
    if isinstance(instance, dict):
        return json.dumps(instance)
    return instance


def canonical(instance: str | dict) -> str:
    return _lattopt.canonical(_instance_text(instance))


def digest(instance: str | dict) -> str:
    return _lattopt.digest(_instance_text(instance))


def generate(which: str, **kwargs: Any) -> str:
    return _lattopt.generate(which, **kwargs)


def count(instance: str | dict) -> dict:
    return _doc(_lattopt.count(_instance_text(instance)))


def bounds(instance: str | dict, k: int, shift: bool = False, digits: int = 6) -> dict:
    return _doc(_lattopt.bounds(_instance_text(instance), k, shift, digits))


def optimize(instance: str | dict, k_max: int = 30, digits: int = 6) -> dict:
    return _doc(_lattopt.optimize(_instance_text(instance), k_max, digits))


def fptas(
    instance: str | dict,
    epsilon: str = "1/10",
    recover: bool = False,
    shift: bool = False,
    digits: int = 6,
) -> dict:
    return _doc(_lattopt.fptas(_instance_text(instance), epsilon, recover, shift, digits))


def oracle(instance: str | dict, budget: int = 20_000_000) -> dict:
    return _doc(_lattopt.oracle(_instance_text(instance), budget))


def mixed(
    instance: str | dict,
    grid: list[int],
    integer_vars: list[int] | None = None,
    epsilon: str = "1/10",
    exact: bool = False,
    nonnegative: bool = False,
    digits: int = 6,
) -> dict:
    return _doc(
        _lattopt.mixed(
            _instance_text(instance),
            integer_vars or [],
            grid,
            epsilon,
            exact,
            nonnegative,
            digits,
        )
    )
