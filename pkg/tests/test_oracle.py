import math
from fractions import Fraction

import pytest

from lukfri import InfeasibleError, InputError, Problem, ResourceError, is_minimal, is_solution
from lukfri.minimality import deltas
from lukfri.oracle import GridSpec, falsify_minimality, grid_feasible, grid_minimax_value
from lukfri import solve_minimax

from conftest import Q, random_problem, random_solution, ref_feasible


def test_gridspec_validation():
    assert GridSpec("1/10").divisions == 10
    with pytest.raises(InputError):
        GridSpec("0.3")
    with pytest.raises(InputError):
        GridSpec(0)
    assert GridSpec("1/2", {Fraction(1, 3)}).values() == [0, Fraction(1, 3), Fraction(1, 2), 1]


def test_grid_feasible_threshold():
    p = Problem([["1"]], ["0.5"])
    got = list(grid_feasible(p, GridSpec("1/10")))
    assert got == [(Fraction(k, 10),) for k in range(5, 11)]


def test_grid_feasible_unsolvable():
    assert list(grid_feasible(Problem([["0.5", "0.5"]], ["1.1"]), GridSpec("1/10"))) == []


def test_grid_feasible_example2(ex2):
    pts = set(grid_feasible(ex2, GridSpec("1/10")))
    assert Q("0.6", 1, 1) in pts
    assert Q("0.5", "0.6", "0.6") not in pts


def test_grid_cap(ex2, monkeypatch):
    with pytest.raises(ResourceError):
        list(grid_feasible(ex2, GridSpec("1/10"), cap=100))
    monkeypatch.setenv("FRI_GRID_CAP", "100")
    with pytest.raises(ResourceError):
        list(grid_feasible(ex2, GridSpec("1/10")))


def test_grid_minimax_value(examples):
    assert grid_minimax_value(examples[5], GridSpec("1/30")) == Fraction(13, 15)
    assert grid_minimax_value(examples[6], GridSpec("1/30")) == Fraction(5, 6)
    assert grid_minimax_value(Problem([["1"]], ["0.5"]), GridSpec("1/10")) == Fraction("0.5")
    with pytest.raises(InfeasibleError):
        grid_minimax_value(Problem([["0.5", "0.5"]], ["1.1"]), GridSpec("1/10"))


def test_full_scan_agrees_with_constant_scan(rng):
    for _ in range(40):
        p = random_problem(rng, 3, 3)
        g = GridSpec("1/20")
        assert grid_minimax_value(p, g, full_scan=True) == grid_minimax_value(p, g)


def test_falsify_examples(ex1, ex2):
    w = falsify_minimality(ex2, Q("0.6", 1, 1), GridSpec("1/10"))
    assert w is not None and w != Q("0.6", 1, 1) and ref_feasible(ex2.A, ex2.b, w)
    assert all(a <= b for a, b in zip(w, Q("0.6", 1, 1)))
    assert falsify_minimality(ex1, Q("0.6", 1, 1), GridSpec("1/10")) is None
    assert falsify_minimality(Problem([["1"]], ["0.5"]), Q("0.5"), GridSpec("1/10")) is None


def test_oracle_matches_reference(rng):
    for _ in range(60):
        p = random_problem(rng, 3, 3)
        g = GridSpec("1/10")
        pts = set(grid_feasible(p, g))
        for k in range(11 ** p.n):
            x = tuple(Fraction((k // 11**j) % 11, 10) for j in range(p.n))
            assert (x in pts) == ref_feasible(p.A, p.b, x)


def test_grid_value_bounds_solver(rng):
    for _ in range(100):
        p = random_problem(rng, 3, 3)
        u = solve_minimax(p).u_star
        for k in (7, 10, 13):
            v = grid_minimax_value(p, GridSpec(Fraction(1, k)))
            assert v >= u
            if k % u.denominator == 0:
                assert v == u


def test_falsifier_finds_witness_when_not_minimal(rng):
    for _ in range(150):
        p = random_problem(rng, 3, 3)
        x = random_solution(rng, p)
        cert = is_minimal(p, x)
        if cert.minimal:
            assert falsify_minimality(p, x, GridSpec("1/20")) is None
        else:
            L = math.lcm(*(d.denominator for d in deltas(p, x)))
            w = falsify_minimality(p, x, GridSpec(Fraction(1, L)))
            assert w is not None and is_solution(p, w)
