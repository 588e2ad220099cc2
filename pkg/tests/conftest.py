import math
import random
from fractions import Fraction

import pytest

from lukfri import Problem
from lukfri.documents import parse_problem, read_source

ACCEPTANCE_LINES = []


def Q(*values):
    """Tuple of fractions from decimal strings / ints / fractions."""
    return tuple(Fraction(v) if not isinstance(v, str) else Fraction(v) for v in values)


def ref_row_sum(row, x):
    """Row evaluation written from the formula, sharing no code with the package."""
    total = Fraction(0)
    for a, xj in zip(row, x):
        s = a + xj - 1
        if s > 0:
            total += s
    return total


def ref_feasible(A, b, x):
    return all(ref_row_sum(row, x) >= bi for row, bi in zip(A, b))


def random_problem(rng, max_m=4, max_n=4, den=10, min_n=1):
    """Random solvable problem with entries k/den."""
    while True:
        m, n = rng.randint(1, max_m), rng.randint(min_n, max_n)
        A = [[Fraction(rng.randint(0, den), den) for _ in range(n)] for _ in range(m)]
        b = [Fraction(rng.randint(1, den * n), den) for _ in range(m)]
        if all(sum(r) >= bi for r, bi in zip(A, b)):
            return Problem(A, b)


def random_solution(rng, p, den=10):
    """Random grid point raised coordinate by coordinate until feasible."""
    x = [Fraction(rng.randint(0, den), den) for _ in range(p.n)]
    while not ref_feasible(p.A, p.b, x):
        j = rng.randrange(p.n)
        if x[j] < 1:
            x[j] = Fraction(rng.randint(int(x[j] * den) + 1, den), den)
    return tuple(x)


def random_above(rng, x, den=10):
    return tuple(Fraction(rng.randint(int(math.ceil(v * den)), den), den) for v in x)


@pytest.fixture(scope="session")
def examples():
    return {k: parse_problem(read_source(f"example{k}.json")) for k in range(1, 8)}


@pytest.fixture(scope="session")
def ex1(examples):
    return examples[1]


@pytest.fixture(scope="session")
def ex2(examples):
    return examples[2]


@pytest.fixture(scope="session")
def ex6(examples):
    return examples[6]


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
