"""Shape enumerators of linear codes and the NRT MacWilliams transform.

A shape enumerator is a polynomial in z_0, ..., z_r whose monomial for
shape e is z_0^(e_0) z_1^(e_1) ... z_r^(e_r); reading a code in the right
space counts codewords by left-to-right shape, reading in the left space by
right-to-left shape.  The transform substitutes

    u_0       = z_0 + (q-1) sum_{i=1..r} q^(i-1) z_i
    u_{r-j+1} = z_0 + (q-1) sum_{k<j} q^(k-1) z_k - q^(j-1) z_j   (j = 1..r)

into the right-reading enumerator of a code and divides by the code size,
producing the left-reading enumerator of its dual.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .space import (
    ArrayTable,
    LinearCode,
    Shape,
    SpaceParams,
    dual_code,
    enumerate_code,
    shape_bar_of,
    shape_of,
)

RIGHT, LEFT = "right", "left"


@dataclass(frozen=True)
class WeightEnumerator:
    params: SpaceParams
    reading: str  # "right" | "left"
    coeffs: dict[Shape, Fraction]

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))


def _rows_of(obj: LinearCode | ArrayTable) -> ArrayTable:
    if isinstance(obj, LinearCode):
        return enumerate_code(obj)
    return obj


def enumerator_of(obj: LinearCode | ArrayTable, reading: str = RIGHT) -> WeightEnumerator:
    """Count rows by shape (right reading) or by right-to-left shape (left
    reading)."""
    if reading not in (RIGHT, LEFT):
        raise ValueError(f"reading must be 'right' or 'left', got {reading!r}")
    table = _rows_of(obj)
    shape_fn = shape_of if reading == RIGHT else shape_bar_of
    coeffs: dict[Shape, Fraction] = {}
    for row in table.rows:
        e = shape_fn(table.params, row)
        coeffs[e] = coeffs.get(e, Fraction(0)) + 1
    return WeightEnumerator(params=table.params, reading=reading, coeffs=coeffs)


# polynomials over z_0..z_r are dicts: exponent tuple (a_0..a_r) -> Fraction


def _poly_mul(p1: dict, p2: dict) -> dict:
    out: dict = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return out


def _poly_pow(p: dict, k: int, nvars: int) -> dict:
    out = {(0,) * nvars: Fraction(1)}
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def _substitution_forms(params: SpaceParams) -> list[dict]:
    """Linear forms u_0, ..., u_r as single-degree polynomials in z."""
    q, r = params.q, params.r
    nv = r + 1

    def unit(j: int) -> tuple:
        return tuple(1 if i == j else 0 for i in range(nv))

    forms = []
    u0 = {unit(0): Fraction(1)}
    for i in range(1, r + 1):
        u0[unit(i)] = Fraction((q - 1) * q ** (i - 1))
    forms.append(u0)
    by_index = {}
    for j in range(1, r + 1):
        u = {unit(0): Fraction(1)}
        for k in range(1, j):
            u[unit(k)] = Fraction((q - 1) * q ** (k - 1))
        u[unit(j)] = Fraction(-(q ** (j - 1)))
        by_index[r - j + 1] = u
    for m in range(1, r + 1):
        forms.append(by_index[m])
    return forms


def transform(enum: WeightEnumerator, codesize: int) -> WeightEnumerator:
    """MacWilliams transform: substitute the u-forms and divide by the code
    size; flips the reading direction."""
    params = enum.params
    nv = params.r + 1
    forms = _substitution_forms(params)
    result: dict = {}
    for e, coeff in enum.coeffs.items():
        e_full = (params.n - sum(e),) + tuple(e)
        monomial = {(0,) * nv: Fraction(1)}
        for j, power in enumerate(e_full):
            if power:
                monomial = _poly_mul(monomial, _poly_pow(forms[j], power, nv))
        for key, c in monomial.items():
            result[key] = result.get(key, Fraction(0)) + coeff * c
    coeffs: dict[Shape, Fraction] = {}
    for key, c in result.items():
        value = c / codesize
        if value != 0:
            coeffs[tuple(key[1:])] = value
    reading = LEFT if enum.reading == RIGHT else RIGHT
    return WeightEnumerator(params=params, reading=reading, coeffs=coeffs)


def verify_duality(code: LinearCode) -> bool:
    """Exact check: the transform of the right-reading enumerator equals the
    left-reading enumerator of the exhaustively computed dual."""
    primal = enumerator_of(code, RIGHT)
    predicted = transform(primal, code.size)
    actual = enumerator_of(dual_code(code), LEFT)
    return predicted.coeffs == actual.coeffs


# ---------------------------------------------------------------------------
# JSON serialization


def enumerator_to_json(enum: WeightEnumerator) -> str:
    p = enum.params
    payload = {
        "params": {"q": p.q, "r": p.r, "n": p.n},
        "reading": enum.reading,
        "coeffs": {
            ",".join(str(c) for c in e): str(v)
            for e, v in sorted(enum.coeffs.items())
        },
    }
    return json.dumps(payload, indent=2)


def enumerator_from_json(text: str) -> WeightEnumerator:
    payload = json.loads(text)
    p = payload["params"]
    params = SpaceParams(q=p["q"], r=p["r"], n=p["n"])
    coeffs = {
        tuple(int(c) for c in key.split(",")): Fraction(val)
        for key, val in payload["coeffs"].items()
    }
    return WeightEnumerator(params=params, reading=payload["reading"], coeffs=coeffs)
