"""Exact Delsarte linear programs for ordered codes and orthogonal arrays.

The code program maximizes the total distance distribution mass subject to
nonnegativity of its Krawtchouk transform; the array program minimizes it
subject to vanishing transform up to the strength.  Both are normalized by
pinning the zero-shape coefficient to 1, so the reported values are
1 + optimum.  Optimal dual solutions of the code program are returned as
polynomial certificates F = F_0 + sum_{e != 0} F_e K_e with

    F_0 > 0,  F_e >= 0,  F(e) <= 0 whenever |e|' >= d,

which certify  M <= F(0)/F_0  for codes and  M' >= q^(nr) F_0/F(0)  for
arrays of strength d-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .krawtchouk import krawtchouk_table
from .simplex import EQ, GE, LE, make_lp, simplex_solve
from .space import (
    Shape,
    SpaceParams,
    enumerate_shapes,
    shape_count,
    shape_weight,
)


class LPError(Exception):
    """The solver returned a status that signals a constraint-assembly bug."""


@dataclass(frozen=True)
class DualCertificate:
    """Coefficients of a feasibility certificate F = F0 + sum F_e K_e."""

    params: SpaceParams
    d: int
    F0: Fraction | float
    F: dict[Shape, Fraction | float]  # keys are nonzero shapes


@dataclass(frozen=True)
class CertificateCheck:
    accepted: bool
    code_bound: Fraction | float | None = None
    ooa_bound: Fraction | float | None = None
    reason: str | None = None
    witness: Shape | None = None


@dataclass(frozen=True)
class CodeLPResult:
    params: SpaceParams
    d: int
    bound: Fraction
    distribution: dict[Shape, Fraction]
    certificate: DualCertificate


@dataclass(frozen=True)
class OoaLPResult:
    params: SpaceParams
    t: int
    bound: Fraction
    distribution: dict[Shape, Fraction]


def evaluate_certificate(cert: DualCertificate, e: Shape):
    table = krawtchouk_table(cert.params)
    return cert.F0 + sum(coeff * table[(g, e)] for g, coeff in cert.F.items())


def check_certificate(
    cert: DualCertificate,
    params: SpaceParams | None = None,
    d: int | None = None,
    tol: float = 0.0,
) -> CertificateCheck:
    """Verify the sign conditions and emit both bounds.

    With tol = 0 every comparison is exact.  With tol > 0 (float
    certificates) the conditions are relaxed to F_e >= -tol*scale and
    F(e) <= tol*scale, where scale is the largest |F(e)| over all shapes.
    """
    params = params or cert.params
    d = d if d is not None else cert.d
    values = {e: evaluate_certificate(cert, e) for e in enumerate_shapes(params)}
    scale = max(1.0, max(abs(float(v)) for v in values.values())) if tol else 0
    if not cert.F0 > 0:
        return CertificateCheck(accepted=False, reason="F0 must be positive")
    for e, coeff in cert.F.items():
        if coeff < -tol * scale:
            return CertificateCheck(
                accepted=False, reason="negative transform coefficient", witness=e
            )
    for e, val in values.items():
        if shape_weight(e) >= d and val > tol * scale:
            return CertificateCheck(
                accepted=False, reason="F positive at excluded shape", witness=e
            )
    zero = (0,) * params.r
    f_at_zero = values[zero]
    return CertificateCheck(
        accepted=True,
        code_bound=f_at_zero / cert.F0,
        ooa_bound=params.ambient_size * cert.F0 / f_at_zero,
    )


def solve_code_lp(params: SpaceParams, d: int) -> CodeLPResult:
    """Largest-code bound: maximize sum of A_e over shapes of weight >= d,
    with A at the zero shape pinned to 1 and the Krawtchouk transform of A
    nonnegative at every shape.  Returns 1 + optimum."""
    if not 1 <= d <= params.dim + 1:
        raise ValueError(f"distance {d} out of range [1, {params.dim + 1}]")
    shapes = list(enumerate_shapes(params))
    zero = (0,) * params.r
    table = krawtchouk_table(params)
    free = [e for e in shapes if shape_weight(e) >= d]  # all other A_e are fixed

    if not free:
        cert = DualCertificate(params=params, d=d, F0=Fraction(1), F={})
        return CodeLPResult(
            params=params,
            d=d,
            bound=Fraction(1),
            distribution={zero: Fraction(1)},
            certificate=cert,
        )

    rows = []
    for f in shapes:
        coeffs = [-table[(f, e)] for e in free]
        rows.append((coeffs, LE, shape_count(params, f)))
    lp = make_lp([1] * len(free), rows, maximize=True)
    res = simplex_solve(lp)
    if res.status != "optimal":
        raise LPError(f"code program returned {res.status}")

    distribution = {zero: Fraction(1)}
    for e, val in zip(free, res.x):
        if val != 0:
            distribution[e] = val
    y = dict(zip(shapes, res.duals))
    cert = DualCertificate(
        params=params,
        d=d,
        F0=1 + y[zero],
        F={f: y[f] for f in shapes if f != zero and y[f] != 0},
    )
    bound = 1 + res.objective
    check = check_certificate(cert)
    if not check.accepted or check.code_bound != bound:
        raise LPError("extracted dual certificate failed verification")
    return CodeLPResult(
        params=params, d=d, bound=bound, distribution=distribution, certificate=cert
    )


def solve_ooa_lp(params: SpaceParams, t: int) -> OoaLPResult:
    """Smallest-array bound: minimize 1 + sum A_e subject to the transform
    vanishing at every nonzero shape of weight <= t and nonnegative above."""
    if not 0 <= t <= params.dim:
        raise ValueError(f"strength {t} out of range [0, {params.dim}]")
    shapes = list(enumerate_shapes(params))
    zero = (0,) * params.r
    table = krawtchouk_table(params)
    free = [e for e in shapes if e != zero]
    rows = []
    for f in shapes:
        if f == zero:
            continue
        coeffs = [table[(f, e)] for e in free]
        rel = EQ if shape_weight(f) <= t else GE
        rows.append((coeffs, rel, -shape_count(params, f)))
    lp = make_lp([1] * len(free), rows, maximize=False)
    res = simplex_solve(lp)
    if res.status != "optimal":
        raise LPError(f"array program returned {res.status}")
    distribution = {zero: Fraction(1)}
    for e, val in zip(free, res.x):
        if val != 0:
            distribution[e] = val
    return OoaLPResult(
        params=params, t=t, bound=1 + res.objective, distribution=distribution
    )


# ---------------------------------------------------------------------------
# Certificate serialization


def format_rational(x: Fraction) -> str:
    fr = Fraction(x)
    return f"{fr.numerator}/{fr.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def shape_key(e: Shape) -> str:
    return ",".join(str(c) for c in e)


def parse_shape_key(key: str) -> Shape:
    return tuple(int(c) for c in key.split(","))


def certificate_to_json(cert: DualCertificate) -> str:
    p = cert.params
    payload = {
        "q": p.q,
        "r": p.r,
        "n": p.n,
        "d": cert.d,
        "F0": format_rational(cert.F0),
        "F": {shape_key(e): format_rational(v) for e, v in sorted(cert.F.items())},
    }
    return json.dumps(payload, indent=2)


def certificate_from_json(text: str) -> DualCertificate:
    payload = json.loads(text)
    params = SpaceParams(q=payload["q"], r=payload["r"], n=payload["n"])
    return DualCertificate(
        params=params,
        d=payload["d"],
        F0=parse_rational(payload["F0"]),
        F={parse_shape_key(k): parse_rational(v) for k, v in payload["F"].items()},
    )
