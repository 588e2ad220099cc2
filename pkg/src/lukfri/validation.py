"""Input checks for array-like arguments, in the spirit of ``sklearn.utils.validation``.

These never go through floating point: floats are read via their decimal
repr and everything comes back as :class:`fractions.Fraction`.
"""
from __future__ import annotations

from typing import List, Tuple

import numpy as np

from .core import Assignment, Problem, as_assignment, to_fraction
from .exceptions import InputError


def _rows(X) -> List[list]:
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise InputError(f"expected a 2-d array, got shape {X.shape}")
        return X.tolist()
    try:
        rows = [list(r) for r in X]
    except TypeError:
        raise InputError("expected a 2-d array-like") from None
    return rows


def check_problem(A, b) -> Problem:
    """Build a :class:`Problem` from array-likes ``A`` (m x n) and ``b`` (m,)."""
    if isinstance(b, np.ndarray) and b.ndim != 1:
        raise InputError(f"b must be 1-d, got shape {b.shape}")
    return Problem(_rows(A), [to_fraction(v) for v in b])


def check_assignments(X, n: int) -> Tuple[Assignment, ...]:
    """Validate a 2-d array-like of points in [0, 1]^n (one point per row)."""
    return tuple(as_assignment(row, n) for row in _rows(X))


def to_object_array(points) -> np.ndarray:
    """Pack exact points into a 2-d ``object`` array of fractions."""
    points = list(points)
    out = np.empty((len(points), len(points[0]) if points else 0), dtype=object)
    for i, x in enumerate(points):
        out[i, :] = list(x)
    return out
