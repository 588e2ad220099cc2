"""Minimal solutions: coordinate lower bounds, certification and reduction.

For a solution ``x`` and a column ``j``, the set of values ``t`` that keep the
system satisfied when ``x_j`` is replaced by ``t`` is an interval ``[delta, 1]``
because ``T_L(a, .)`` is continuous and nondecreasing. ``delta`` has the
closed form

    delta_j(x) = max(0, max_i {1 - a_ij + b_i - R_i : b_i - R_i > 0}),

where ``R_i`` is row ``i`` evaluated without column ``j``. A solution is
minimal exactly when it is a fixed point of all the ``delta_j``; repeatedly
replacing coordinates by their ``delta`` in some order walks any solution
down to a minimal one below it.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import (
    ONE,
    ZERO,
    Assignment,
    Problem,
    _check_col,
    _check_dim,
    is_solution,
    leq,
    require_solvable,
    row_values,
    scaled,
)
from .exceptions import InputError, InternalError, PreconditionError, ResourceError

#: Largest ``n`` for which a sweep over all ``n!`` orders runs without an override.
MAX_SWEEP_N = 8


def _require_solution(p: Problem, x: Sequence[Fraction]) -> Assignment:
    x = _check_dim(p, x)
    if not is_solution(p, x):
        raise PreconditionError(f"{tuple(str(v) for v in x)} is not a solution of the system")
    return x


def _deltas(p: Problem, x: Sequence[Fraction], cols: Iterable[int]) -> Assignment:
    # Integer arithmetic over a common denominator L; terms are scaled by L.
    L, A, b, xs = scaled(p, x)
    terms = [[max(a + xj - L, 0) for a, xj in zip(row, xs)] for row in A]
    slack = [bi - sum(t) for bi, t in zip(b, terms)]
    out = []
    for j in cols:
        low = 0
        for row, t, s in zip(A, terms, slack):
            need = s + t[j]  # b_i minus the row without column j
            if need > 0 and L - row[j] + need > low:
                low = L - row[j] + need
        out.append(Fraction(low, L))
    return tuple(out)


def delta(p: Problem, x: Sequence[Fraction], j: int) -> Fraction:
    """Least value coordinate ``j`` of the solution ``x`` can take on its own."""
    _check_col(p, j)
    x = _require_solution(p, x)
    return _deltas(p, x, (j,))[0]


def deltas(p: Problem, x: Sequence[Fraction]) -> Assignment:
    """``delta(p, x, j)`` for every column, sharing one row evaluation."""
    x = _require_solution(p, x)
    return _deltas(p, x, range(p.n))


def f_interval(p: Problem, x: Sequence[Fraction], j: int) -> Tuple[Fraction, Fraction]:
    """Feasible replacement values for coordinate ``j`` as ``(low, 1)``."""
    return delta(p, x, j), ONE


def support(x: Sequence[Fraction]) -> frozenset:
    """Indices of the strictly positive coordinates."""
    return frozenset(j for j, v in enumerate(x) if v > 0)


@dataclass(frozen=True)
class MinimalityCertificate:
    """Evidence for or against minimality of a solution.

    ``minimal`` is decided by the fixed-point test (``x_j == delta_j(x)`` for
    every ``j``), which is both necessary and sufficient. ``tight_row`` is a
    single row that is tight and unclamped on the whole support; when present
    it proves minimality on its own. It may be absent for a minimal solution
    whose coordinates are pinned by different rows; ``row_witness`` records
    whether such a row exists.
    """

    minimal: bool
    tight_row: Optional[int]
    support: frozenset
    strict_flags: Dict[int, bool]
    fixed_point_deltas: Assignment
    tight_rows: Tuple[int, ...] = ()
    pinning_rows: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def row_witness(self) -> bool:
        return self.tight_row is not None


def row_witness(p: Problem, x: Sequence[Fraction]) -> Optional[int]:
    """First row that is tight at ``x`` with ``a_ij + x_j - 1 > 0`` on the support."""
    x = _check_dim(p, x)
    supp = support(x)
    for i, (v, bi) in enumerate(zip(row_values(p, x), p.b)):
        if v == bi and all(p.A[i][j] + x[j] - ONE > 0 for j in supp):
            return i
    return None


def is_minimal(p: Problem, x: Sequence[Fraction]) -> MinimalityCertificate:
    x = _require_solution(p, x)
    x = tuple(x)
    values = row_values(p, x)
    ds = _deltas(p, x, range(p.n))
    fixed = ds == x
    supp = support(x)
    tight = tuple(i for i, (v, bi) in enumerate(zip(values, p.b)) if v == bi)
    witness = row_witness(p, x)
    if witness is not None and not fixed:
        # a single pinning row forbids lowering any support coordinate
        raise InternalError(f"row {witness} certifies minimality but x is not a delta fixed point")
    flags_row = witness if witness is not None else (tight[0] if tight else None)
    flags = {}
    if flags_row is not None:
        flags = {j: p.A[flags_row][j] + x[j] - ONE > 0 for j in sorted(supp)}
    pinning = {
        j: tuple(i for i in tight if p.A[i][j] + x[j] - ONE > 0) for j in sorted(supp)
    }
    return MinimalityCertificate(
        minimal=fixed,
        tight_row=witness,
        support=supp,
        strict_flags=flags,
        fixed_point_deltas=ds,
        tight_rows=tight,
        pinning_rows=pinning,
    )


def single_coordinate_candidate(p: Problem, j: int) -> Tuple[Assignment, bool]:
    """All-ones with coordinate ``j`` lowered to ``max_i max(0, 1 + b_i - sum_t a_it)``.

    The result is always a solution. ``certified`` is True only when every
    entry of ``A`` is positive and ``a_ij + y_j - 1 > 0`` in every row, which
    guarantees minimality; otherwise ask :func:`is_minimal`.
    """
    _check_col(p, j)
    require_solvable(p)
    yj = max([ZERO] + [ONE + bi - s for bi, s in zip(p.b, p.row_sums())])
    y = tuple(yj if k == j else ONE for k in range(p.n))
    certified = all(a > 0 for row in p.A for a in row) and all(
        row[j] + yj - ONE > 0 for row in p.A
    )
    return y, certified


def _as_perm(perm: Optional[Sequence[int]], n: int) -> Tuple[int, ...]:
    if perm is None:
        return tuple(range(n))
    perm = tuple(int(k) for k in perm)
    if sorted(perm) != list(range(n)):
        raise InputError(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


@dataclass(frozen=True)
class ReductionStep:
    index: int
    delta: Fraction
    vector: Assignment


@dataclass(frozen=True)
class ReductionTrace:
    start: Assignment
    perm: Tuple[int, ...]
    shortcut_vector: Assignment
    shortcut_used: bool
    steps: Tuple[ReductionStep, ...]
    result: Assignment


def reduction_trace(
    p: Problem, x: Sequence[Fraction], perm: Optional[Sequence[int]] = None
) -> ReductionTrace:
    """Walk ``x`` down to a minimal solution, recording every step.

    First tries the vector of lower bounds at all-ones; if that is a solution
    below ``x`` it is the unique minimal solution and is returned directly.
    Otherwise coordinates are replaced by their current ``delta`` in ``perm``
    order.
    """
    x = _require_solution(p, x)
    x = tuple(x)
    perm = _as_perm(perm, p.n)
    shortcut = deltas(p, (ONE,) * p.n)
    if is_solution(p, shortcut) and leq(shortcut, x):
        return ReductionTrace(x, perm, shortcut, True, (), shortcut)
    current = list(x)
    steps: List[ReductionStep] = []
    for j in perm:
        d = _deltas(p, current, (j,))[0]
        current[j] = d
        steps.append(ReductionStep(j, d, tuple(current)))
    return ReductionTrace(x, perm, shortcut, False, tuple(steps), tuple(current))


def reduce_to_minimal(
    p: Problem, x: Sequence[Fraction], perm: Optional[Sequence[int]] = None
) -> Assignment:
    """A minimal solution below the solution ``x``; see :func:`reduction_trace`."""
    return reduction_trace(p, x, perm).result


def _reduce_many(args):
    p, x, perms = args
    return [reduce_to_minimal(p, x, perm) for perm in perms]


def _batched(it: Iterable, size: int):
    it = iter(it)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def enumerate_minimals(
    p: Problem,
    x: Sequence[Fraction],
    limit: int = 720,
    *,
    allow_large: bool = False,
    jobs: int = 1,
) -> List[Assignment]:
    """Distinct minimal solutions below ``x`` reached from the ``n!`` reduction orders.

    Orders are tried lexicographically until they run out or ``limit``
    distinct results have been found. The result is sorted. Not every minimal
    solution below ``x`` need be reachable this way.
    """
    if limit < 1:
        raise InputError(f"limit must be positive, got {limit}")
    x = _require_solution(p, x)
    x = tuple(x)
    if p.n > MAX_SWEEP_N and not allow_large:
        raise ResourceError(
            f"sweeping {p.n}! orders is refused for n > {MAX_SWEEP_N}; pass allow_large=True"
        )
    perms = itertools.permutations(range(p.n))
    found: Dict[Assignment, None] = {}
    if jobs > 1:
        batches = ((p, x, chunk) for chunk in _batched(perms, 64))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = itertools.chain.from_iterable(pool.map(_reduce_many, batches))
            for y in results:
                found.setdefault(y)
                if len(found) >= limit:
                    break
    else:
        for perm in perms:
            found.setdefault(reduce_to_minimal(p, x, perm))
            if len(found) >= limit:
                break
    return sorted(found)


def unique_minimal(p: Problem) -> Optional[Assignment]:
    """The unique minimal solution if there is one, else ``None``."""
    require_solvable(p)
    v = deltas(p, (ONE,) * p.n)
    return v if is_solution(p, v) else None
