"""Edit sensitivity of repetitiveness measures."""

import json
from fractions import Fraction

from . import _core
from ._core import RepsenseError, apply_edit, bwt, family_ids, measure_ids

__all__ = [
    "RepsenseError",
    "apply_edit",
    "bwt",
    "check_relations",
    "family",
    "family_ids",
    "global_worst",
    "measure",
    "measure_ids",
    "sensitivity",
    "verify_family",
]


def _records(s):
    return [json.loads(line) for line in s.splitlines() if line]


def measure(name, text, limits="", strict=True):
    """Value of a measure as a Fraction. With strict=False returns (value, conclusive)."""
    (num, den), conclusive = _core.evaluate(name, text, limits)
    value = Fraction(num, den)
    if strict:
        if not conclusive:
            raise RepsenseError(f"{name}: search limit reached, only an upper bound is known")
        return value
    return value, conclusive


def sensitivity(name, text, kind, policy=None, limits=""):
    """Worst multiplicative and additive change over all single edits of one kind.

    policy: None (one fresh symbol), an int k (k fresh symbols) or a list of allowed symbols.
    Returns the summary record followed by one record per edit.
    """
    return _records(_core.sensitivity(name, text, kind, policy, limits))


def global_worst(name, n, sigma, kind, fresh=True, jobs=1, limits=""):
    return _records(_core.global_worst(name, n, sigma, kind, fresh, jobs, limits))[0]


def family(name, **params):
    t, edited, kind, pos, sym = _core.family(name, params)
    return {"t": t, "edited": edited, "edit": {"kind": kind, "pos": pos, "sym": sym}}


def verify_family(name, limits="", **params):
    return _records(_core.verify_family(name, params, limits))


def check_relations(text, limits=""):
    return _records(_core.check_relations(text, limits))
