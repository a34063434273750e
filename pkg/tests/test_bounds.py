import json
from fractions import Fraction

import pytest

from nrtbounds.bounds import (
    R2Witness,
    bassalygo_elias,
    best_bounds,
    bound_table_json,
    dual_plotkin_ooa,
    gilbert,
    hamming,
    johnson,
    plotkin,
    r2_bound,
    r2_certificate,
    r2_ooa_bound,
    rao,
    singleton,
    spectral_bound,
    spectral_bound_ooa,
    varshamov,
)
from nrtbounds.delsarte import solve_code_lp, solve_ooa_lp
from nrtbounds.oracles import brute_force_max_code, constant_weight_max
from nrtbounds.space import SpaceParams, ball_size, delta_crit

P22 = SpaceParams(2, 2, 2)


def test_singleton():
    assert singleton(P22, 1).value == 16
    assert singleton(P22, 2).value == 8
    assert singleton(P22, 5).value == 1
    with pytest.raises(ValueError):
        singleton(P22, 6)


def test_plotkin():
    assert plotkin(SpaceParams(2, 1, 2), 2).value == 2
    res = plotkin(P22, 4)
    assert res.value == Fraction(8, 3) and res.floor == 2
    # the threshold itself is excluded
    p = SpaceParams(2, 1, 2)  # mean weight is exactly 1
    assert not plotkin(p, 1).applicable


def test_dual_plotkin():
    p = SpaceParams(2, 1, 2)
    assert dual_plotkin_ooa(p, 1).value == 2
    assert dual_plotkin_ooa(p, 2).value == Fraction(8, 3)
    t_full = P22.dim
    want = P22.ambient_size * (1 - delta_crit(2, 2) * 4 / (t_full + 1))
    assert dual_plotkin_ooa(P22, t_full).value == want
    assert not dual_plotkin_ooa(P22, 1).applicable  # 1 <= 5/2 - 1


def test_hamming_rao():
    assert hamming(P22, 1).value == 16
    res = hamming(P22, 3)
    assert res.value == Fraction(16, 3) and res.floor == 5
    assert rao(P22, 2).value == 3
    # shared ball: hamming(d) * ball = ambient
    for d in (1, 3, 5):
        tau = (d - 1) // 2
        assert hamming(P22, d).value * ball_size(P22, tau) == P22.ambient_size


def test_johnson():
    assert johnson(P22, 4, 1).value == Fraction(5, 3)
    assert johnson(P22, 2, 0).value == 1
    assert not johnson(P22, 1, 2).applicable


def test_bassalygo_elias():
    res = bassalygo_elias(P22, 2)
    assert res.value == 16 and res.witness == {"w": 0}
    # inadmissible beyond the critical distance
    assert not bassalygo_elias(P22, 3).applicable or delta_crit(2, 2) * 4 >= 3
    # w = 1 term from the worked instance: 64 / 1.6 = 40
    inner = johnson(P22, 2, 1)
    term = Fraction(P22.ambient_size, 2) * inner.value
    assert term == 40


def test_gilbert():
    assert gilbert(P22, 1).value == 16
    assert gilbert(P22, 2).value == 6  # ceil(16/3)


def test_varshamov():
    assert varshamov(P22, 2) == 2
    assert varshamov(SpaceParams(2, 1, 4), 2) == 3  # 1 + S_{1,3} = 4, need 2^m > 4


def test_spectral_bound_example():
    res = spectral_bound(SpaceParams(2, 1, 4), 2)
    assert res.applicable and res.witness["kappa"] == 1
    assert res.value == pytest.approx(24.0, rel=1e-9)
    ooa = spectral_bound_ooa(SpaceParams(2, 1, 4), 1)
    assert ooa.value == pytest.approx(16 / 24.0, rel=1e-9)


def test_spectral_bound_inapplicable_region():
    # hypothesis unsatisfiable when even the largest eigenvalue is too small
    p = SpaceParams(2, 2, 2)
    res = spectral_bound(p, 1)
    if res.applicable:
        assert res.value >= brute_force_max_code(p, 1)


@pytest.mark.parametrize("q,r,n", [(2, 1, 3), (2, 2, 2)])
def test_upper_bounds_dominate_oracle(q, r, n):
    p = SpaceParams(q, r, n)
    for d in range(1, p.dim + 2):
        exact = brute_force_max_code(p, d)
        assert gilbert(p, d).value <= exact
        for bound in (singleton(p, d), plotkin(p, d), hamming(p, d), bassalygo_elias(p, d)):
            if bound.applicable:
                assert bound.value >= exact, (bound.name, d)


def test_johnson_dominates_constant_weight_oracle():
    p = SpaceParams(2, 2, 2)
    for d in range(1, 5):
        for w in range(0, 5):
            res = johnson(p, d, w)
            if res.applicable:
                assert res.value >= constant_weight_max(p, d, w)


def test_r2_bound_small_instance_sanity():
    p = SpaceParams(2, 2, 3)
    for d in range(1, p.dim + 2):
        res = r2_bound(p, d)
        if res.applicable:
            assert res.value >= brute_force_max_code(p, d) - 1e-9


def test_r2_bound_pinned_regression():
    p = SpaceParams(2, 2, 8)
    res = r2_bound(p, 12)
    assert res.applicable
    assert res.witness["s1"] == 1 and res.witness["s2"] == 0
    assert res.value == pytest.approx(6.0, abs=1e-6)
    cert, chk = r2_certificate(p, 12, R2Witness(**res.witness))
    assert chk.accepted
    assert chk.code_bound <= res.value + 1e-6


def test_r2_ooa_bound():
    p = SpaceParams(2, 2, 8)
    res = r2_ooa_bound(p, 11)
    assert res.applicable
    assert res.value == pytest.approx(p.ambient_size / 6.0, rel=1e-6)


def test_r2_requires_depth_two():
    assert not r2_bound(SpaceParams(2, 1, 4), 2).applicable
    assert not r2_ooa_bound(SpaceParams(2, 3, 4), 2).applicable


def test_spectral_and_r2_dominate_lp():
    for q, r, n in [(2, 1, 3), (2, 1, 4), (2, 2, 2), (2, 2, 3)]:
        p = SpaceParams(q, r, n)
        for d in range(1, p.dim + 2):
            lp = solve_code_lp(p, d).bound
            sb = spectral_bound(p, d)
            if sb.applicable:
                assert sb.value + 1e-9 >= lp, ("spectral", q, r, n, d)
            if r == 2:
                rb = r2_bound(p, d)
                if rb.applicable:
                    assert rb.value + 1e-9 >= lp, ("r2", q, r, n, d)


def test_best_bounds_table():
    table = best_bounds(P22, 4)
    names = [b.name for b in table.bounds]
    assert "singleton" in names and "plotkin" in names and "rao" in names
    # at d = 4 the exponent bound 2^(nr-d+1) = 2 undercuts plotkin's 8/3
    assert table.best_upper == "singleton"
    # inapplicable entries are present, not dropped
    payload = json.loads(bound_table_json(table))
    assert payload["d"] == 4
    assert len(payload["bounds"]) == len(table.bounds)
    for entry in payload["bounds"]:
        assert set(entry) == {
            "name",
            "side",
            "applicable",
            "value",
            "floor",
            "tolerance",
            "witness",
            "reason",
        }
    d1 = best_bounds(P22, 1)
    uppers = [b for b in d1.bounds if b.applicable and b.side == "upper-on-code-size"]
    assert all(b.value >= P22.ambient_size - 1e-6 for b in uppers)
