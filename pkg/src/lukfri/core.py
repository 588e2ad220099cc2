"""Exact scalars, the Łukasiewicz t-norm and the inequality system itself.

Every number is a :class:`fractions.Fraction`. A system is

    sum_j T_L(a_ij, x_j) >= b_i    for every row i,

with ``T_L(a, x) = max(a + x - 1, 0)``, entries ``a_ij`` in [0, 1] and
``b_i > 0``. Indices are 0-based throughout the Python API.
"""
from __future__ import annotations

import decimal
import math
import numbers
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .exceptions import InfeasibleError, InputError

Assignment = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Convert a literal to an exact rational.

    Strings may be decimals (``"0.85"``) or ratios (``"13/15"``). Floats are
    read through their shortest decimal repr, so ``0.1`` becomes ``1/10``
    rather than the binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"boolean {value!r} is not a number")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, decimal.Decimal):
        if not value.is_finite():
            raise InputError(f"non-finite number {value!r}")
        return Fraction(value)
    if isinstance(value, numbers.Real):
        text = repr(float(value))
        if text in ("nan", "inf", "-inf"):
            raise InputError(f"non-finite number {value!r}")
        return Fraction(text)
    if isinstance(value, str):
        text = value.strip()
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse {value!r} as an exact rational") from None
        return result
    raise InputError(f"unsupported number literal {value!r} of type {type(value).__name__}")


def to_unit(value) -> Fraction:
    """Like :func:`to_fraction` but also require the result to lie in [0, 1]."""
    q = to_fraction(value)
    if not ZERO <= q <= ONE:
        raise InputError(f"{value!r} is outside [0, 1]")
    return q


def as_assignment(x: Iterable, n: int | None = None) -> Assignment:
    """Validate ``x`` as a point of [0, 1]^n and return it as a tuple of fractions."""
    try:
        out = tuple(to_unit(v) for v in x)
    except InputError as exc:
        raise InputError(f"assignment: {exc}") from None
    if n is not None and len(out) != n:
        raise InputError(f"assignment has length {len(out)}, expected {n}")
    return out


def format_decimal(q: Fraction) -> str | None:
    """Exact decimal rendering of ``q`` when it terminates, else ``None``.

    Canonical form: no exponent, no trailing zeros, no trailing point.
    """
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    digits = max(twos, fives)
    scaled = q * 10**digits
    assert scaled.denominator == 1
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


@dataclass(frozen=True)
class Problem:
    """The pair ``(A, b)``; immutable and validated on construction.

    ``A`` and ``b`` accept any nested iterables of number literals; they are
    stored as tuples of :class:`~fractions.Fraction`.
    """

    A: Tuple[Tuple[Fraction, ...], ...]
    b: Tuple[Fraction, ...]

    def __post_init__(self):
        rows = []
        for i, row in enumerate(self.A):
            try:
                rows.append(tuple(to_unit(v) for v in row))
            except InputError as exc:
                raise InputError(f"A row {i}: {exc}") from None
        if not rows:
            raise InputError("A must have at least one row")
        n = len(rows[0])
        if n == 0:
            raise InputError("A must have at least one column")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InputError(f"A is ragged: row {i} has {len(row)} entries, row 0 has {n}")
        req = []
        for i, v in enumerate(self.b):
            q = to_fraction(v)
            if q <= 0:
                raise InputError(f"b[{i}] = {q} must be positive")
            req.append(q)
        if len(req) != len(rows):
            raise InputError(f"b has length {len(req)}, A has {len(rows)} rows")
        object.__setattr__(self, "A", tuple(rows))
        object.__setattr__(self, "b", tuple(req))

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.m, self.n

    def row_sums(self) -> Tuple[Fraction, ...]:
        return tuple(sum(row, ZERO) for row in self.A)

    @cached_property
    def _denominator(self) -> int:
        return math.lcm(*(v.denominator for row in self.A for v in row), *(v.denominator for v in self.b))


def scaled(p: Problem, x: Sequence[Fraction]):
    """``(L, A*L, b*L, x*L)`` as integers over a common denominator ``L``.

    Large systems spend most of their time in Fraction normalization; callers
    that loop over every entry work on these integers instead.
    """
    L = math.lcm(p._denominator, *(v.denominator for v in x))
    A = [[v.numerator * (L // v.denominator) for v in row] for row in p.A]
    b = [v.numerator * (L // v.denominator) for v in p.b]
    xs = [v.numerator * (L // v.denominator) for v in x]
    return L, A, b, xs


def _scaled_row_values(L: int, A, xs):
    return [sum(t for t in (a + xj - L for a, xj in zip(row, xs)) if t > 0) for row in A]


def luk(a: Fraction, x: Fraction) -> Fraction:
    """Łukasiewicz t-norm ``max(a + x - 1, 0)``."""
    s = a + x - ONE
    return s if s > 0 else ZERO


def _check_row(p: Problem, i: int) -> None:
    if not 0 <= i < p.m:
        raise InputError(f"row index {i} out of range for {p.m} rows")


def _check_col(p: Problem, j: int) -> None:
    if not 0 <= j < p.n:
        raise InputError(f"column index {j} out of range for {p.n} columns")


def _check_dim(p: Problem, x: Sequence) -> Assignment:
    """``x`` as a validated tuple of fractions of the right length."""
    x = tuple(x)
    if len(x) != p.n:
        raise InputError(f"assignment has length {len(x)}, problem has {p.n} columns")
    return as_assignment(x)


def row_value(p: Problem, i: int, x: Sequence[Fraction]) -> Fraction:
    """Left-hand side of row ``i`` evaluated at ``x``."""
    _check_row(p, i)
    x = _check_dim(p, x)
    return sum((luk(a, xj) for a, xj in zip(p.A[i], x)), ZERO)


def row_values(p: Problem, x: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    x = _check_dim(p, x)
    L, A, _, xs = scaled(p, x)
    return tuple(Fraction(v, L) for v in _scaled_row_values(L, A, xs))


def is_solution(p: Problem, x: Sequence[Fraction]) -> bool:
    x = _check_dim(p, x)
    L, A, b, xs = scaled(p, x)
    return all(v >= bi for v, bi in zip(_scaled_row_values(L, A, xs), b))


def is_solvable(p: Problem) -> bool:
    """Every row sum of ``A`` must reach its requirement."""
    return all(s >= bi for s, bi in zip(p.row_sums(), p.b))


def require_solvable(p: Problem) -> None:
    if not is_solvable(p):
        bad = [i for i, (s, bi) in enumerate(zip(p.row_sums(), p.b)) if s < bi]
        raise InfeasibleError(f"system has no solution: row sums below b in rows {bad}")


def greatest_solution(p: Problem) -> Assignment:
    require_solvable(p)
    return (ONE,) * p.n


def join(x: Sequence[Fraction], y: Sequence[Fraction]) -> Assignment:
    """Coordinatewise maximum."""
    if len(x) != len(y):
        raise InputError(f"cannot join assignments of lengths {len(x)} and {len(y)}")
    return tuple(max(a, b) for a, b in zip(x, y))


def leq(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    """Coordinatewise ``x <= y``."""
    if len(x) != len(y):
        raise InputError(f"cannot compare assignments of lengths {len(x)} and {len(y)}")
    return all(a <= b for a, b in zip(x, y))


def unique_solution_check(p: Problem) -> bool:
    """True iff all-ones is the only solution.

    With strictly positive entries this is exactly "some row sum equals its
    requirement". A tight row without zeros is always sufficient. Otherwise the
    question is settled by the per-coordinate lower bounds at all-ones: the
    solution is unique iff every one of them equals 1.
    """
    require_solvable(p)
    tight = [i for i, (s, bi) in enumerate(zip(p.row_sums(), p.b)) if s == bi]
    if any(all(a > 0 for a in p.A[i]) for i in tight):
        return True
    if all(a > 0 for row in p.A for a in row):
        return False
    from .minimality import delta

    ones = (ONE,) * p.n
    return all(delta(p, ones, j) == ONE for j in range(p.n))
