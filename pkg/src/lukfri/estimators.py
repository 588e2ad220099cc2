"""scikit-learn style wrappers.

``fit(A, b)`` treats the rows of ``A`` as samples and ``b`` as their
targets. Results stay exact: arrays come back with ``dtype=object`` holding
:class:`fractions.Fraction` values.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import minimality, minimax
from .core import is_solution, require_solvable
from .validation import check_assignments, check_problem, to_object_array


class MinimalSolutionReducer(TransformerMixin, BaseEstimator):
    """Map solutions of the system to minimal solutions below them.

    Parameters
    ----------
    perm : sequence of int, optional
        0-based order in which coordinates are lowered. ``None`` means
        ``0, 1, ..., n-1``.
    """

    def __init__(self, perm=None):
        self.perm = perm

    def fit(self, A, b):
        self.problem_ = check_problem(A, b)
        require_solvable(self.problem_)
        self.n_features_in_ = self.problem_.n
        self.unique_minimal_ = minimality.unique_minimal(self.problem_)
        return self

    def transform(self, X):
        check_is_fitted(self, "problem_")
        pts = check_assignments(X, self.problem_.n)
        return to_object_array(minimality.reduce_to_minimal(self.problem_, x, self.perm) for x in pts)

    def is_minimal(self, X):
        check_is_fitted(self, "problem_")
        pts = check_assignments(X, self.problem_.n)
        return np.array([minimality.is_minimal(self.problem_, x).minimal for x in pts])

    def predict(self, X):
        """Feasibility of each row of ``X``."""
        check_is_fitted(self, "problem_")
        pts = check_assignments(X, self.problem_.n)
        return np.array([is_solution(self.problem_, x) for x in pts])


class MinimaxSolver(BaseEstimator):
    """Minimize ``max_j x_j`` subject to the system given to :meth:`fit`.

    Parameters
    ----------
    minimal_optimals : bool
        Also enumerate minimal optimal solutions during ``fit``.
    limit : int
        Cap on the number of distinct minimal optimal solutions.
    jobs : int
        Worker count for row solving and order sweeps.

    Attributes
    ----------
    u_star_ : Fraction
    row_optima_ : tuple of Fraction
    traces_ : tuple of RowMinimaxTrace
    greatest_optimal_ : ndarray of shape (n,), dtype object
    unique_ : bool
    minimal_optimals_ : ndarray of shape (k, n), dtype object
    """

    def __init__(self, minimal_optimals=False, limit=720, jobs=1):
        self.minimal_optimals = minimal_optimals
        self.limit = limit
        self.jobs = jobs

    def fit(self, A, b):
        p = check_problem(A, b)
        res = minimax.solve_minimax(p, jobs=self.jobs)
        self.problem_ = p
        self.result_ = res
        self.n_features_in_ = p.n
        self.u_star_ = res.u_star
        self.row_optima_ = res.row_optima
        self.traces_ = tuple(t for _, t in res.per_row)
        self.greatest_optimal_ = np.array(res.greatest_optimal, dtype=object)
        self.unique_ = res.unique
        if self.minimal_optimals:
            sols = minimax.minimal_optimal_solutions(p, self.limit, jobs=self.jobs)
            self.minimal_optimals_ = to_object_array(sols)
        return self

    def objective(self, X):
        """Largest coordinate of each row of ``X``."""
        check_is_fitted(self, "result_")
        return np.array([minimax.objective(x) for x in check_assignments(X, self.problem_.n)], dtype=object)

    def is_optimal(self, X):
        check_is_fitted(self, "result_")
        pts = check_assignments(X, self.problem_.n)
        return np.array([is_solution(self.problem_, x) and max(x) == self.u_star_ for x in pts])
