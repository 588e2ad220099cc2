"""Brute-force grid references for testing the solver.

Nothing here calls the evaluation routines in :mod:`lukfri.core`; the
t-norm and the row sums are written out again so the two can disagree.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Optional, Sequence

from .core import Assignment, Problem, to_fraction, to_unit
from .exceptions import InfeasibleError, InputError, PreconditionError, ResourceError

DEFAULT_CAP = 10**7


def default_cap() -> int:
    env = os.environ.get("FRI_GRID_CAP")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise InputError(f"FRI_GRID_CAP={env!r} is not an integer") from None
        if cap < 1:
            raise InputError("FRI_GRID_CAP must be positive")
        return cap
    return DEFAULT_CAP


@dataclass(frozen=True)
class GridSpec:
    """Per-coordinate grid ``{0, step, 2*step, ..., 1}`` plus optional extra points."""

    step: Fraction
    extra_points: FrozenSet[Fraction] = frozenset()

    def __post_init__(self):
        step = to_fraction(self.step)
        if step <= 0 or step > 1 or (1 / step).denominator != 1:
            raise InputError(f"grid step {step} must be 1/k for a positive integer k")
        object.__setattr__(self, "step", step)
        object.__setattr__(self, "extra_points", frozenset(to_unit(v) for v in self.extra_points))

    @property
    def divisions(self) -> int:
        return int(1 / self.step)

    def values(self) -> List[Fraction]:
        k = self.divisions
        return sorted({Fraction(i, k) for i in range(k + 1)} | self.extra_points)


def _tl(a: Fraction, x: Fraction) -> Fraction:
    return max(a + x - 1, Fraction(0))


def _feasible(A, b, x) -> bool:
    for row, bi in zip(A, b):
        total = Fraction(0)
        for a, xj in zip(row, x):
            total += _tl(a, xj)
        if total < bi:
            return False
    return True


def _check_budget(counts: Sequence[int], cap: Optional[int]) -> None:
    cap = default_cap() if cap is None else cap
    total = math.prod(counts)
    if total > cap:
        raise ResourceError(f"grid has {total} points, cap is {cap}")


def grid_feasible(p: Problem, g: GridSpec, cap: Optional[int] = None) -> Iterator[Assignment]:
    """Yield every feasible grid point in lexicographic order."""
    values = g.values()
    _check_budget([len(values)] * p.n, cap)
    A, b = p.A, p.b
    for x in itertools.product(values, repeat=p.n):
        if _feasible(A, b, x):
            yield x


def grid_minimax_value(
    p: Problem, g: GridSpec, *, full_scan: bool = False, cap: Optional[int] = None
) -> Fraction:
    """Least grid value ``t`` whose constant vector is feasible.

    With ``full_scan`` the minimum of ``max(x)`` over every feasible grid point
    is returned instead; both agree because raising all coordinates to the
    maximum keeps a point feasible.
    """
    A, b = p.A, p.b
    if not _feasible(A, b, (Fraction(1),) * p.n):
        raise InfeasibleError("system has no solution")
    if full_scan:
        best = None
        for x in grid_feasible(p, g, cap):
            z = max(x)
            if best is None or z < best:
                best = z
        assert best is not None
        return best
    for t in g.values():
        if _feasible(A, b, (t,) * p.n):
            return t
    raise AssertionError("all-ones is feasible but was not reached")


def falsify_minimality(
    p: Problem, x: Sequence, g: GridSpec, cap: Optional[int] = None
) -> Optional[Assignment]:
    """A feasible point ``y <= x``, ``y != x`` drawn from the grid, or ``None``.

    Coordinate ``j`` ranges over grid values up to ``x_j`` together with
    ``x_j`` itself. ``None`` only means no counterexample on this grid.
    """
    x = tuple(to_unit(v) for v in x)
    if len(x) != p.n:
        raise InputError(f"assignment has length {len(x)}, problem has {p.n} columns")
    A, b = p.A, p.b
    if not _feasible(A, b, x):
        raise PreconditionError("falsify_minimality needs a solution")
    values = g.values()
    axes = [sorted({v for v in values if v <= xj} | {xj}) for xj in x]
    _check_budget([len(ax) for ax in axes], cap)
    for y in itertools.product(*axes):
        if y != x and _feasible(A, b, y):
            return y
    return None
