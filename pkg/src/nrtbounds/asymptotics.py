"""Asymptotic rate-versus-distance curves for the ordered Hamming space.

The sphere-volume exponent H is computed through the unique positive root
of its saddle-point equation; the linear-programming curve maximizes the
limiting eigenvalue expression over weight profiles; the depth-2 curve
minimizes a two-parameter entropy expression under a root-position
constraint.  Everything here is double precision with deterministic grids
and local refinement; exactness is not meaningful for these quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .krawtchouk import gamma
from .space import delta_crit


@dataclass(frozen=True)
class CurvePoint:
    delta: float
    rate: float
    meta: dict


@dataclass(frozen=True)
class NetCurvePoint:
    delta: float
    rate: float
    alpha: float


class RootBracketError(Exception):
    pass


def _poly_sum(q: int, r: int, z: float) -> float:
    """A(z) = ((q-1)/q) (z + z^2 + ... + z^r)."""
    return (q - 1) / q * sum(z**i for i in range(1, r + 1))


def z0_solve(q: int, r: int, x: float) -> float:
    """Unique positive root z0 of  x r (1 + A(z)) = ((q-1)/q) sum i z^i.

    The root grows with x and reaches q at the critical distance, so the
    initial bracket is expanded geometrically until it straddles the root.
    """
    if not 0 < x < 1:
        raise ValueError(f"x={x} outside (0, 1)")

    def g(z: float) -> float:
        rhs = (q - 1) / q * sum(i * z**i for i in range(1, r + 1))
        return x * r * (1 + _poly_sum(q, r, z)) - rhs

    lo = 1e-30
    hi = float(max(q, r) + 1)
    grow = 0
    while g(hi) > 0:
        hi *= 2
        grow += 1
        if grow > 200:
            raise RootBracketError(f"no sign change up to z={hi}")
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def h_q(q: int, x: float) -> float:
    """q-ary entropy: -x log_q(x/(q-1)) - (1-x) log_q(1-x)."""
    if x < 0 or x > 1:
        raise ValueError(f"x={x} outside [0, 1]")
    total = 0.0
    if x > 0:
        total -= x * math.log(x / (q - 1), q)
    if x < 1:
        total -= (1 - x) * math.log(1 - x, q)
    return total


def H(q: int, r: int, x: float) -> float:
    """Sphere-volume exponent: x (1 - log_q z0) + (1/r) log_q(1 + A(z0))."""
    if x == 0:
        return 0.0
    if not 0 < x <= float(delta_crit(q, r)):
        raise ValueError(f"x={x} outside (0, delta_crit]")
    z0 = z0_solve(q, r, x)
    return x * (1 - math.log(z0, q)) + math.log(1 + _poly_sum(q, r, z0), q) / r


# ---------------------------------------------------------------------------
# Elementary curves (rate as a function of relative distance)


def gv_curve(q: int, r: int, delta: float) -> float:
    dc = float(delta_crit(q, r))
    if delta <= 0:
        return 1.0
    if delta >= dc:
        return 0.0
    return 1.0 - H(q, r, delta)


def hamming_curve(q: int, r: int, delta: float) -> float:
    if delta <= 0:
        return 1.0
    return 1.0 - H(q, r, delta / 2)


def plotkin_curve(q: int, r: int, delta: float) -> float:
    dc = float(delta_crit(q, r))
    if delta <= 0:
        return 1.0
    if delta >= dc:
        return 0.0
    return 1.0 - delta / dc


def be_curve(q: int, r: int, delta: float) -> float:
    dc = float(delta_crit(q, r))
    if delta <= 0:
        return 1.0
    if delta >= dc:
        return 0.0
    inner = dc * (1.0 - math.sqrt(1.0 - delta / dc))
    return 1.0 - H(q, r, inner)


# ---------------------------------------------------------------------------
# The limiting eigenvalue expression and the LP curve


def lambda_expression(q: int, r: int, taus) -> float:
    """Limiting scaled eigenvalue contribution of a weight profile
    (tau_1, ..., tau_r) with tau = sum tau_i:

        sum_i L_i [ 2 sqrt((1-tau) tau_i (q-1) q^(i-1))
                    + (q-2) tau_i (q^r - q^(i-1))
                    + 2 (q-1)/q sum_{k<i} sqrt(tau_k tau_i q^(i+k)) ].
    """
    tau = sum(taus)
    total = 0.0
    for i in range(1, r + 1):
        li = (q ** (r - i + 1) - 1) / (q**r * (q - 1))
        ti = max(taus[i - 1], 0.0)
        term = 2.0 * math.sqrt(max((1 - tau) * ti * (q - 1) * q ** (i - 1), 0.0))
        term += (q - 2) * ti * (q**r - q ** (i - 1))
        term += (
            2.0
            * (q - 1)
            / q
            * sum(math.sqrt(max(taus[k - 1] * ti, 0.0) * q ** (i + k)) for k in range(1, i))
        )
        total += li * term
    return total


def _simplex_grid(total: float, parts: int, steps: int):
    """Deterministic lattice on {x >= 0, sum x = total} with the given step
    count per axis."""
    if parts == 1:
        yield (total,)
        return
    for j in range(steps + 1):
        head = total * j / steps
        for rest in _simplex_grid(total - head, parts - 1, steps):
            yield (head,) + rest


def lambda_asym(q: int, r: int, tau: float) -> tuple[float, tuple[float, ...]]:
    """Maximum of the limiting eigenvalue expression over weight profiles
    with total tau; returns (max, argmax).

    Dense simplex grid followed by concave pairwise-transfer refinement.
    """
    if not 0 <= tau <= 1:
        raise ValueError(f"tau={tau} outside [0, 1]")
    if tau == 0:
        return 0.0, (0.0,) * r
    if r == 1:
        return lambda_expression(q, 1, (tau,)), (tau,)
    steps = 200 if r <= 3 else 40
    best_val = -math.inf
    best = None
    for point in _simplex_grid(tau, r, steps):
        val = lambda_expression(q, r, point)
        if val > best_val:
            best_val, best = val, point
    taus = list(best)
    # pairwise mass transfers; the expression is concave along each line
    for _ in range(200):
        improved = 0.0
        for i in range(r):
            for j in range(i + 1, r):
                mass = taus[i] + taus[j]
                if mass == 0:
                    continue
                lo, hi = 0.0, mass

                def value_at(x: float) -> float:
                    trial = list(taus)
                    trial[i], trial[j] = x, mass - x
                    return lambda_expression(q, r, trial)

                for _ in range(80):
                    m1 = lo + (hi - lo) / 3
                    m2 = hi - (hi - lo) / 3
                    if value_at(m1) < value_at(m2):
                        lo = m1
                    else:
                        hi = m2
                x = 0.5 * (lo + hi)
                new_val = value_at(x)
                if new_val > best_val:
                    improved += new_val - best_val
                    best_val = new_val
                    taus[i], taus[j] = x, mass - x
        if improved < 1e-14:
            break
    return best_val, tuple(taus)


def lp_rate(q: int, r: int, tau: float) -> float:
    return (h_q(q, tau) + tau * math.log((q**r - 1) / (q - 1), q)) / r


def lp_ooa_rate(q: int, r: int, tau: float) -> float:
    """Array-side reflection of the code curve: arrays of the matching
    relative strength have rate at least 1 minus the code rate."""
    return 1.0 - lp_rate(q, r, tau)


def lp_delta(q: int, r: int, tau: float) -> float:
    return float(delta_crit(q, r)) - lambda_asym(q, r, tau)[0] / r


def lp_curve(q: int, r: int, taus) -> list[CurvePoint]:
    """Parametric linear-programming curve over the supplied tau grid,
    emitted in ascending delta order."""
    points = []
    for tau in taus:
        lam, profile = lambda_asym(q, r, tau)
        delta = float(delta_crit(q, r)) - lam / r
        points.append(
            CurvePoint(
                delta=delta,
                rate=lp_rate(q, r, tau),
                meta={"tau": tau, "profile": profile},
            )
        )
    points.sort(key=lambda pt: pt.delta)
    return points


def lp_curve_default_taus(q: int, grid: int) -> list[float]:
    """Principal branch: tau in (0, (q-1)/q], where the entropy term is
    increasing and delta decreases with tau."""
    top = (q - 1) / q
    return [top * j / grid for j in range(1, grid + 1)]


# ---------------------------------------------------------------------------
# Depth-2 curve


def _phi_objective(q: int, t1: float, t2: float) -> float:
    return 0.5 * (t2 + h_q(q, t1) + (1 - t1) * h_q(q, t2 / (1 - t1)))


def _phi_feasible(q: int, t1: float, t2: float, delta: float) -> bool:
    g2 = gamma(q, t2)
    return g2 + (2 - g2) * (1 - t2) * gamma(q, t1) <= 2 * delta


def phi_r2(q: int, delta: float) -> float:
    """Depth-2 asymptotic upper bound on the rate at relative distance
    delta; returns the vacuous value 1 when the constraint set is empty."""
    value, _ = phi_r2_with_witness(q, delta)
    return value


def phi_r2_with_witness(q: int, delta: float):
    if not 0 < delta <= float(delta_crit(q, 2)):
        raise ValueError(f"delta={delta} outside (0, delta_crit]")
    t1_max = (q - 1) / q**2
    t2_max = (q - 1) / q
    steps = 200
    best = None
    for i in range(steps + 1):
        t1 = t1_max * i / steps
        for j in range(steps + 1):
            t2 = t2_max * j / steps
            if not _phi_feasible(q, t1, t2, delta):
                continue
            val = _phi_objective(q, t1, t2)
            if best is None or val < best[0]:
                best = (val, t1, t2)
    if best is None:
        return 1.0, None
    val, t1, t2 = best
    radius1 = t1_max / steps
    radius2 = t2_max / steps
    while radius1 > 1e-12 or radius2 > 1e-12:
        improved = False
        for di in (-1.0, -0.5, 0.0, 0.5, 1.0):
            for dj in (-1.0, -0.5, 0.0, 0.5, 1.0):
                c1 = min(max(t1 + di * radius1, 0.0), t1_max)
                c2 = min(max(t2 + dj * radius2, 0.0), t2_max)
                if not _phi_feasible(q, c1, c2, delta):
                    continue
                cv = _phi_objective(q, c1, c2)
                if cv < val - 1e-16:
                    val, t1, t2 = cv, c1, c2
                    improved = True
        if not improved:
            radius1 *= 0.3
            radius2 *= 0.3
    return val, (t1, t2)


# ---------------------------------------------------------------------------
# Digital-net curves (rate m/s versus relative strength (m-t)/s)


def psi_nets(q: int, delta: float) -> NetCurvePoint:
    """Existence exponent for digital nets: the root alpha of

        delta a^2 + (q-1)(delta+1) a - (q-1) = 0        (positive branch)

    plugged into  delta - 1 + log_q((q-1+a)/a) - delta log_q(1-a).
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    b = (q - 1) * (delta + 1)
    disc = math.sqrt(b * b + 4 * delta * (q - 1))
    alpha = 2 * (q - 1) / (b + disc)  # rationalized positive root
    rate = (
        delta
        - 1
        + math.log((q - 1 + alpha) / alpha, q)
        - delta * math.log(1 - alpha, q)
    )
    return NetCurvePoint(delta=delta, rate=rate, alpha=alpha)


def psi_quadratic_residual(q: int, delta: float, alpha: float) -> float:
    return delta * alpha * alpha + (q - 1) * (delta + 1) * alpha - (q - 1)


def nets_rao(q: int, delta: float) -> float:
    """Strength-halving companion: every net family has rate at least
    Psi(delta/2)."""
    return psi_nets(q, delta / 2).rate
