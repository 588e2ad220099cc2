"""Minimize ``max_j x_j`` over the solution set.

The greatest optimal solution is a constant vector ``(u*, ..., u*)``, so the
problem reduces to finding the least ``u`` with every row satisfied at the
constant vector ``u``. Each row is handled separately by an active-set
iteration and ``u*`` is the largest of the row optima.
"""
from __future__ import annotations

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .core import ONE, ZERO, Assignment, Problem, to_fraction, to_unit, require_solvable
from .exceptions import InfeasibleError, InputError, InternalError
from .minimality import enumerate_minimals, is_minimal


@dataclass(frozen=True)
class TraceStep:
    k: int
    u: Fraction
    active: frozenset
    row_sum: Fraction


@dataclass(frozen=True)
class RowMinimaxTrace:
    row: Optional[int]
    steps: Tuple[TraceStep, ...]
    final_u: Fraction

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class MinimaxResult:
    per_row: Tuple[Tuple[Fraction, RowMinimaxTrace], ...]
    u_star: Fraction
    greatest_optimal: Assignment
    unique: bool

    @property
    def optimal_value(self) -> Fraction:
        return self.u_star

    @property
    def row_optima(self) -> Tuple[Fraction, ...]:
        return tuple(u for u, _ in self.per_row)


def objective(x: Sequence[Fraction]) -> Fraction:
    """Largest coordinate."""
    if len(x) == 0:
        raise InputError("objective of an empty assignment")
    return max(x)


def solve_row(
    a_row: Sequence, b_i, row: Optional[int] = None
) -> Tuple[Fraction, RowMinimaxTrace]:
    """Least ``u`` with ``sum_j T_L(a_j, u) >= b_i``, plus the iteration trace.

    Starts from ``u0 = (b_i - sum a) / n + 1``; while the sum over the active
    set ``{j : u >= 1 - a_j}`` overshoots ``b_i``, the next iterate solves the
    linear equation on the current active set. The loop stops on a tight sum,
    which must coincide with the active set no longer shrinking.
    """
    a = tuple(to_unit(v) for v in a_row)
    b = to_fraction(b_i)
    n = len(a)
    if n == 0:
        raise InputError("empty row")
    if b <= 0:
        raise InputError(f"requirement {b} must be positive")
    if sum(a, ZERO) < b:
        raise InfeasibleError(f"row {row}: sum of entries {sum(a, ZERO)} is below {b}")

    # Integers over a common denominator L. The active set is always the k
    # largest entries, so the sum over it is a prefix sum of the sorted row.
    L = math.lcm(b.denominator, *(v.denominator for v in a))
    ai = [v.numerator * (L // v.denominator) for v in a]
    bi = b.numerator * (L // b.denominator)
    asc = sorted(ai)
    top = [0]
    for v in reversed(asc):
        top.append(top[-1] + v)

    def count_active(u: Fraction) -> int:
        return n - bisect.bisect_left(asc, math.ceil((ONE - u) * L))

    u = Fraction(bi - top[n], n * L) + ONE
    k_active = count_active(u)
    steps = []
    prev: Optional[int] = None
    for k in range(n + 1):
        if not k_active:
            raise InputError(f"row {row}: empty active set at u = {u}")
        # each active term a_j + u - 1 is nonnegative, so no clamping
        total = Fraction(top[k_active], L) + k_active * (u - ONE)
        threshold = math.ceil((ONE - u) * L)
        active = frozenset(j for j, v in enumerate(ai) if v >= threshold)
        steps.append(TraceStep(k, u, active, total))
        tight = total == b
        settled = prev is not None and k_active == prev
        if prev is not None and tight != settled:
            raise InternalError(
                f"row {row}: tight sum ({tight}) and settled active set ({settled}) disagree at k={k}"
            )
        if tight:
            return u, RowMinimaxTrace(row, tuple(steps), u)
        if total < b:
            raise InternalError(f"row {row}: iterate u = {u} is infeasible")
        if prev is not None and not k_active < prev:
            raise InternalError(f"row {row}: active set did not shrink at k={k}")
        prev = k_active
        u = Fraction(bi - top[k_active], k_active * L) + ONE
        k_active = count_active(u)
    raise InternalError(f"row {row}: no convergence within {n + 1} steps")


def solve_minimax(p: Problem, *, jobs: int = 1) -> MinimaxResult:
    require_solvable(p)
    rows = range(p.m)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_row = tuple(pool.map(lambda i: solve_row(p.A[i], p.b[i], i), rows))
    else:
        per_row = tuple(solve_row(p.A[i], p.b[i], i) for i in rows)
    u_star = max(u for u, _ in per_row)
    greatest = (u_star,) * p.n
    unique = is_minimal(p, greatest).minimal
    return MinimaxResult(per_row, u_star, greatest, unique)


def minimal_optimal_solutions(
    p: Problem, limit: int = 720, *, allow_large: bool = False, jobs: int = 1
) -> List[Assignment]:
    """Minimal solutions below the greatest optimal solution; all of them are optimal."""
    res = solve_minimax(p)
    out = enumerate_minimals(p, res.greatest_optimal, limit, allow_large=allow_large, jobs=jobs)
    for x in out:
        if objective(x) != res.u_star:
            raise InternalError(f"minimal solution {x} below u* has objective {objective(x)}")
    return out
