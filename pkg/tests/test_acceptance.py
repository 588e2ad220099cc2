"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from lukfri import (
    Problem,
    enumerate_minimals,
    is_minimal,
    is_solution,
    join,
    minimal_optimal_solutions,
    objective,
    reduce_to_minimal,
    reduction_trace,
    single_coordinate_candidate,
    solve_minimax,
    solve_row,
    unique_minimal,
    unique_solution_check,
)
from lukfri.core import leq
from lukfri.minimality import deltas, row_witness
from lukfri.oracle import GridSpec, falsify_minimality, grid_feasible, grid_minimax_value

from conftest import ACCEPTANCE_LINES, Q, random_above, random_problem, random_solution


def record(label, description, ok, detail=""):
    line = f"criterion {label:<4} {'PASS' if ok else 'FAIL'}  {description}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c01_example1_candidates(ex1):
    expected = [Q("0.6", 1, 1), Q(1, "0.6", 1), Q(1, 1, "0.6")]
    got = [single_coordinate_candidate(ex1, j) for j in range(3)]
    ok = got == [(y, True) for y in expected] and all(is_minimal(ex1, y).minimal for y in expected)
    record("1", "Example 1 single-coordinate candidates certified minimal", ok)


def test_c02_example2_not_minimal(ex2):
    x = Q("0.6", 1, 1)
    w = falsify_minimality(ex2, x, GridSpec("1/10"))
    ok = is_solution(ex2, x) and not is_minimal(ex2, x).minimal and w is not None
    record("2", "Example 2: (0.6,1,1) feasible, not minimal, grid witness found", ok, f"witness={w}")


def test_c03_reduction_walkthrough(ex1):
    tr = reduction_trace(ex1, Q("0.8", "0.9", "1"), (0, 1, 2))
    target = Q("0.7", "0.9", "1")
    ok = (
        tr.shortcut_vector == Q("0.6", "0.6", "0.6")
        and not tr.shortcut_used
        and [s.index for s in tr.steps] == [0, 1, 2]
        and [s.delta for s in tr.steps] == list(Q("0.7", "0.9", "1"))
        and all(s.vector == target for s in tr.steps)
        and tr.result == target
    )
    record("3", "reduction of (0.8,0.9,1) gives (0.7,0.9,1) via deltas 0.7, 0.9, 1", ok)


def test_c04_six_orders_three_minimals(ex2):
    x = Q("0.9", "0.9", "0.9")
    got = enumerate_minimals(ex2, x, 6)
    per_perm = [reduce_to_minimal(ex2, x, perm) for perm in itertools.permutations(range(3))]
    ok = got == [Q("0.8", "0.9", "0.9"), Q("0.9", "0.8", "0.9"), Q("0.9", "0.9", "0.8")] and len(per_perm) == 6
    record("4", "six orders from (0.9,0.9,0.9) give exactly three minimal solutions", ok)


def test_c05_single_row_trace():
    u, tr = solve_row(["0", "0.1", "0.5", "0.8", "0.6", "0.3"], "1.4")
    steps = [(s.k, s.u, s.active, s.row_sum) for s in tr.steps]
    # 0-based column indices: {2,3,4,5} are columns 3..6
    expected = [
        (0, Fraction(17, 20), frozenset({2, 3, 4, 5}), Fraction(8, 5)),
        (1, Fraction(4, 5), frozenset({2, 3, 4, 5}), Fraction(7, 5)),
    ]
    ok = steps == expected and u == Fraction(4, 5) and tr.final_u == u
    record("5", "single-row trace u0=17/20 -> u1=4/5, active columns 3..6", ok)


def test_c06_example5(examples):
    res = solve_minimax(examples[5])
    ok = res.row_optima == Q("4/5", "13/15", "5/6") and res.u_star == Fraction(13, 15) and res.unique
    record("6", "Example 5: row optima (4/5,13/15,5/6), u*=13/15, unique", ok)


def test_c07_example6(examples):
    res = solve_minimax(examples[6])
    ok = (
        res.row_optima == Q("5/6", "7/10", "4/5", "19/25")
        and res.u_star == Fraction(5, 6)
        and not res.unique
    )
    record("7", "Example 6: row optima (5/6,7/10,4/5,19/25), u*=5/6, not unique", ok)


def test_c08_example7(examples):
    p = examples[6]
    got = minimal_optimal_solutions(p, 120)
    ok = (
        Q("7/15", "5/6", "5/6", "5/6", "5/6") in got
        and Q("5/6", "5/6", "5/6", "2/3", "5/6") in got
        and all(objective(x) == Fraction(5, 6) and is_minimal(p, x).minimal for x in got)
    )
    record("8", "Example 7 minimal optimal solutions found, objective 5/6, minimal", ok, f"{len(got)} found")


# -- criterion 9: property suite ---------------------------------------------------------


@pytest.fixture(scope="module")
def property_cases():
    rng = random.Random(9)
    cases = []
    for _ in range(500):
        p = random_problem(rng, 4, 4, den=10)
        x = random_solution(rng, p)
        x2 = random_solution(rng, p)
        y = random_above(rng, x)
        perm = tuple(rng.sample(range(p.n), p.n))
        lam = Fraction(rng.randint(0, 12), 12)
        cases.append((p, x, x2, y, perm, lam))
    return cases


def _count(cases, check):
    bad = [c for c in cases if not check(*c)]
    return len(bad), bad[:1]


def test_c09a_up_set(property_cases):
    nbad, ex = _count(property_cases, lambda p, x, x2, y, perm, lam: is_solution(p, y))
    record("9a", "up-set closure", nbad == 0, f"{nbad} failures")


def test_c09b_join(property_cases):
    nbad, ex = _count(property_cases, lambda p, x, x2, y, perm, lam: is_solution(p, join(x, x2)))
    record("9b", "join closure", nbad == 0, f"{nbad} failures")


def test_c09c_segment(property_cases):
    def check(p, x, x2, y, perm, lam):
        z = tuple(lam * a + (1 - lam) * c for a, c in zip(y, x))
        return is_solution(p, z)

    nbad, ex = _count(property_cases, check)
    record("9c", "comparable-segment feasibility", nbad == 0, f"{nbad} failures")


def test_c09d_characterization_agreement(property_cases):
    """Single tight row witness vs. delta fixed point, on random and reduced solutions."""

    def check(p, x, x2, y, perm, lam):
        for z in (x, y, reduce_to_minimal(p, x, perm)):
            single_row = row_witness(p, z) is not None
            fixed_point = deltas(p, z) == z
            if single_row != fixed_point:
                return False
        return True

    nbad, ex = _count(property_cases, check)
    detail = f"{nbad} failures"
    if ex:
        p, x, _, _, perm, _ = ex[0]
        detail += f"; e.g. A={[[str(v) for v in r] for r in p.A]} b={[str(v) for v in p.b]}"
    record("9d", "single-row minimality test agrees with fixed-point test", nbad == 0, detail)


def test_c09e_reduction_soundness(property_cases):
    def check(p, x, x2, y, perm, lam):
        z = reduce_to_minimal(p, x, perm)
        return (
            is_solution(p, z)
            and leq(z, x)
            and is_minimal(p, z).minimal
            and all(reduce_to_minimal(p, z, q) == z for q in itertools.permutations(range(p.n)))
        )

    nbad, ex = _count(property_cases, check)
    record("9e", "reduction soundness (feasible, below, minimal, fixed point)", nbad == 0, f"{nbad} failures")


def test_c09f_monotonicity(property_cases):
    def check(p, x, x2, y, perm, lam):
        return all(a >= b for a, b in zip(deltas(p, x), deltas(p, y)))

    nbad, ex = _count(property_cases, check)
    record("9f", "lower bounds are antitone in the solution", nbad == 0, f"{nbad} failures")


def test_c09g_projection(property_cases):
    def check(p, x, x2, y, perm, lam):
        ones = (Fraction(1),) * p.n
        for j, d in enumerate(deltas(p, ones)):
            for t in (d, (d + 1) / 2, Fraction(1)):
                if not is_solution(p, ones[:j] + (t,) + ones[j + 1:]):
                    return False
            for eps in (Fraction(1, 10), Fraction(1, 1000)):
                if d - eps >= 0 and is_solution(p, ones[:j] + (d - eps,) + ones[j + 1:]):
                    return False
        return True

    nbad, ex = _count(property_cases, check)
    record("9g", "coordinate projection boundary", nbad == 0, f"{nbad} failures")


# ----------------------------------------------------------------------------------------


def test_c10_oracle_equivalence():
    rng = random.Random(10)
    mismatches = 0
    for _ in range(100):
        p = random_problem(rng, 3, 3, den=10)
        D = math.lcm(*(v.denominator for row in p.A for v in row), *(v.denominator for v in p.b))
        u = solve_minimax(p).u_star
        if grid_minimax_value(p, GridSpec(Fraction(1, math.factorial(p.n) * D))) != u:
            mismatches += 1
        feasible = set(grid_feasible(p, GridSpec(Fraction(1, D))))
        for x in itertools.product([Fraction(k, D) for k in range(D + 1)], repeat=p.n):
            if (x in feasible) != is_solution(p, x):
                mismatches += 1
    record("10", "grid oracle equals solver on 100 random problems (n <= 3)", mismatches == 0, f"{mismatches} mismatches")


def test_c11_iteration_counts_and_speed():
    rng = random.Random(11)
    bad = 0
    for _ in range(60):
        n = rng.choice([rng.randint(1, 50), rng.randint(50, 1000), 1000])
        a = [Fraction(rng.randint(0, 1000), 1000) for _ in range(n)]
        total = sum(a)
        if total == 0:
            continue
        b = total * Fraction(rng.randint(1, 1000), 1000)
        _, tr = solve_row(a, b)
        steps = tr.steps
        chain_ok = all(s2.active < s1.active for s1, s2 in zip(steps, steps[1:-1]))
        if len(steps) > 1:
            chain_ok = chain_ok and steps[-1].active == steps[-2].active
        if len(steps) > n + 1 or not chain_ok:
            bad += 1
    times = []
    for _ in range(3):
        A = [[Fraction(rng.randint(0, 100), 100) for _ in range(200)] for _ in range(200)]
        b = [sum(r) * Fraction(rng.randint(1, 100), 100) for r in A]
        p = Problem(A, b)
        start = time.perf_counter()
        solve_minimax(p)
        times.append(time.perf_counter() - start)
    ok = bad == 0 and max(times) < 5.0
    record("11", "trace length <= n+1, strict active-set chain, 200x200 solve < 5 s", ok,
           f"{bad} bad traces, slowest solve {max(times):.2f}s")


def test_c12_unique_solution_flip():
    rng = random.Random(12)
    bad = 0
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[Fraction(rng.randint(1, 10), 10) for _ in range(n)] for _ in range(m)]
        tight = rng.randrange(m)
        b = [sum(r) if i == tight else sum(r) * Fraction(rng.randint(1, 9), 10) for i, r in enumerate(A)]
        p = Problem(A, b)
        ones = (Fraction(1),) * n
        if not (unique_solution_check(p) and unique_minimal(p) == ones):
            bad += 1
            continue
        b2 = list(b)
        b2[tight] -= Fraction(1, 100)
        q = Problem(A, b2)
        um = unique_minimal(q)
        if unique_solution_check(q) or not (um is None or (leq(um, ones) and um != ones)):
            bad += 1
    record("12", "tight positive row forces unique solution; lowering b by 1/100 breaks it", bad == 0, f"{bad} failures")
