import random
from fractions import Fraction

import pytest

from nrtbounds.simplex import EQ, GE, LE, make_lp, simplex_solve


def test_one_variable_toy():
    res = simplex_solve(make_lp([1], [([1], LE, 1)]))
    assert res.status == "optimal"
    assert res.objective == 1
    assert res.x == (1,)


def test_degenerate_tie_unique_value():
    # two optimal vertices, one optimal value
    lp = make_lp([1, 1], [([1, 0], LE, 1), ([0, 1], LE, 1), ([1, 1], LE, 2)])
    res = simplex_solve(lp)
    assert res.objective == 2


def test_minimize():
    lp = make_lp([2, 3], [([1, 1], GE, 4), ([1, 0], LE, 10)], maximize=False)
    res = simplex_solve(lp)
    assert res.status == "optimal"
    assert res.objective == 8
    assert res.x == (4, 0)


def test_equality_constraints():
    lp = make_lp([1, 1], [([1, 1], EQ, 3), ([1, 0], LE, 2)])
    res = simplex_solve(lp)
    assert res.objective == 3


def test_unbounded_with_ray():
    res = simplex_solve(make_lp([1], [([-1], LE, 1)]))
    assert res.status == "unbounded"
    assert res.ray == (1,)


def test_infeasible():
    res = simplex_solve(make_lp([1], [([1], LE, 1), ([1], GE, 2)]))
    assert res.status == "infeasible"


def test_exact_rational_answer():
    lp = make_lp(
        [Fraction(1, 3), Fraction(1, 7)],
        [([Fraction(2, 5), 1], LE, Fraction(9, 11)), ([1, 0], LE, 1)],
    )
    res = simplex_solve(lp)
    assert res.status == "optimal"
    assert res.objective == Fraction(1, 3) + Fraction(1, 7) * (
        Fraction(9, 11) - Fraction(2, 5)
    )


def test_duals_on_binding_constraints():
    # max x + y st x <= 2, y <= 3: both bind, duals are the objective weights
    lp = make_lp([1, 1], [([1, 0], LE, 2), ([0, 1], LE, 3)])
    res = simplex_solve(lp)
    assert res.duals == (1, 1)


def test_dual_is_rhs_sensitivity():
    rng = random.Random(12)
    for _ in range(30):
        nvars = rng.randint(1, 4)
        nrows = rng.randint(1, 4)
        c = [Fraction(rng.randint(0, 5)) for _ in range(nvars)]
        rows = []
        for _ in range(nrows):
            coeffs = [Fraction(rng.randint(0, 4)) for _ in range(nvars)]
            rows.append((coeffs, LE, Fraction(rng.randint(1, 9))))
        # box to keep everything bounded
        for j in range(nvars):
            rows.append(([Fraction(int(j == i)) for i in range(nvars)], LE, Fraction(10)))
        res = simplex_solve(make_lp(c, rows))
        assert res.status == "optimal"
        # weak duality: dual objective equals primal objective
        dual_obj = sum(y * rhs for y, (_, _, rhs) in zip(res.duals, rows))
        assert dual_obj == res.objective
        assert all(y >= 0 for y in res.duals)


def test_against_floating_solver():
    scipy = pytest.importorskip("scipy.optimize")
    rng = random.Random(99)
    for _ in range(40):
        nvars = rng.randint(1, 5)
        nrows = rng.randint(1, 5)
        c = [rng.randint(-3, 5) for _ in range(nvars)]
        rows = []
        A_ub, b_ub = [], []
        for _ in range(nrows):
            coeffs = [rng.randint(-2, 4) for _ in range(nvars)]
            rhs = rng.randint(0, 8)
            rows.append((coeffs, LE, rhs))
            A_ub.append(coeffs)
            b_ub.append(rhs)
        for j in range(nvars):
            coeffs = [int(j == i) for i in range(nvars)]
            rows.append((coeffs, LE, 7))
            A_ub.append(coeffs)
            b_ub.append(7)
        exact = simplex_solve(make_lp(c, rows))
        ref = scipy.linprog(
            [-x for x in c], A_ub=A_ub, b_ub=b_ub, bounds=[(0, None)] * nvars
        )
        assert exact.status == "optimal" and ref.status == 0
        assert float(exact.objective) == pytest.approx(-ref.fun, abs=1e-6)
